"""Where ring arithmetic and lattice combinatorics meet.

For a curve ring R with canonical module K0, the value set of a colon
module K0 : E equals the combinatorial difference of the value sets,
and Q-dimensions of module quotients equal lattice distances.  This
script computes both sides of each equation independently and prints
them next to each other.

Run:  python3 demos/ring_meets_semigroup.py
"""

from goodsemi import difference, relative_distance
from goodsemi.errors import InclusionError
from goodsemi.ringbridge import (
    colon_value_ideal,
    length_quotient,
    parse_curve,
    value_ideal,
)

CURVE = """\
branches: 2
ring: (-t^4, t) ; (-t^3, 0) ; (0, t) ; (t^5, 0)
module E: (t^3, t) ; (t^2, 0)
module F: (t^3, t) ; (t^4, 0) ; (t^5, 0)
module K0: (1, 1) ; (t, 1) ; (t^2, 1)
module CR: (t^3, 0) ; (t^4, 0) ; (t^5, 0) ; (0, t)
"""


def main():
    spec = parse_curve(CURVE)
    GK = value_ideal(spec, "K0")

    print("colon modules against the canonical module")
    print(f"{'module':>8} | {'Gamma(K0 : M)':<34} | matches K0-difference?")
    print("-" * 78)
    for name in ("R", "E", "F", "CR"):
        ring_side = colon_value_ideal(spec, "K0", name)
        semi_side = difference(GK, value_ideal(spec, name))
        frame = ", ".join(map(str, ring_side.frame_sorted))
        print(f"{name:>8} | {frame:<34} | {ring_side == semi_side}")

    print()
    print("lengths of module quotients vs. lattice distances")
    dist_header = "d(GF\\GE)"
    print(f"{'pair':>12} | {'l(F/E)':>7} | {dist_header:>9}")
    print("-" * 38)
    names = ["R", "E", "F", "K0", "CR", "Rbar", "C"]
    for big in names:
        for small in names:
            if big == small:
                continue
            try:
                ell = length_quotient(spec, big, small)
            except InclusionError:
                continue
            d = relative_distance(
                value_ideal(spec, small), value_ideal(spec, big)
            )
            print(f"{big + '/' + small:>12} | {ell:>7} | {d:>9}")

    print()
    print("Every row agreeing is the commuting square: taking values")
    print("first and dualizing after gives the same answer as dualizing")
    print("in the ring and taking values last.")


if __name__ == "__main__":
    main()
