"""Walk through a two-branch curve from parametrization to value sets.

The ring lives inside Q[[t]] x Q[[t]] and is generated by four vectors.
We compute the value semigroup of the ring, the value sets of two
modules, and then watch their pointwise sum fail the exchange axiom --
the phenomenon that motivates treating good semigroup ideals as objects
in their own right.

Run:  python3 demos/two_branch_walkthrough.py
"""

from goodsemi import is_subset, sum_ideals, validate
from goodsemi.plot import ascii_lattice
from goodsemi.ringbridge import (
    module_generators,
    parse_curve,
    poly_mul_vec,
    value_ideal,
)
from goodsemi.ringbridge.curves import value_ideal_from_polys

CURVE = """\
branches: 2
ring: (-t^4, t) ; (-t^3, 0) ; (0, t) ; (t^5, 0)
module E: (t^3, t) ; (t^2, 0)
module F: (t^3, t) ; (t^4, 0) ; (t^5, 0)
"""


def show(title, G):
    print(f"--- {title}")
    print(f"frame points: {list(G.frame_sorted)}")
    print(f"minimum {G.mu}, conductor {G.conductor}")
    print(ascii_lattice(G, hi=(8, 5)))


def main():
    spec = parse_curve(CURVE)
    GS = value_ideal(spec, "R")
    GE = value_ideal(spec, "E")
    GF = value_ideal(spec, "F")

    show("value semigroup of the ring", GS)
    show("value set of module E", GE)
    show("value set of module F", GF)

    GEF = sum_ideals(GE, GF)
    show("pointwise sum of the two value sets", GEF)

    print("--- validating the sum")
    report = validate(GEF)
    print(report.summary())
    print()

    # the honest module product tells a different story
    prods = tuple(
        poly_mul_vec(a, b)
        for a in module_generators(spec, "E")
        for b in module_generators(spec, "F")
    )
    G_prod = value_ideal_from_polys(spec, prods)
    show("value set of the product module E*F", G_prod)
    print(
        "sum contained in product:",
        is_subset(GEF, G_prod),
        "| equal:",
        GEF == G_prod,
    )
    print("The gap between the two is where the sum stops being good.")


if __name__ == "__main__":
    main()
