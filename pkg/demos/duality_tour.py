"""Duality in pictures: canonical ideal, dual, and double dual.

Start from a staircase-shaped good semigroup, build its normalized
canonical ideal K0, and dualize an ideal E that satisfies the
min-closure axiom but not the exchange axiom.  Dualizing twice then
strictly enlarges E -- the involution K - (K - E) = E is a theorem
precisely for certified good ideals.

Run:  python3 demos/duality_tour.py
"""

from goodsemi import (
    GoodSemigroup,
    IdealFrame,
    canonical_normalized,
    difference,
    is_subset,
    is_symmetric,
    validate,
)
from goodsemi.plot import ascii_lattice


def banner(text):
    print()
    print("=" * 60)
    print(text)
    print("=" * 60)


def main():
    S = GoodSemigroup.from_points(
        [(0, 0), (3, 2), (5, 4), (6, 4), (5, 6), (8, 6)], gamma=(8, 6)
    )
    banner("the semigroup S")
    print(ascii_lattice(S.ideal))

    K = canonical_normalized(S)
    banner("its normalized canonical ideal K0")
    print(ascii_lattice(K))
    print("K0 - K0 == S:", difference(K, K) == S.ideal)
    print("S symmetric (S == K0):", is_symmetric(S))

    E = IdealFrame.from_points(
        [(1, 2), (2, 2), (3, 2), (4, 4), (5, 4), (6, 4), (6, 5), (7, 5)],
        gamma=(7, 5),
    )
    banner("an ideal E that is min-closed but NOT exchange-closed")
    print(ascii_lattice(E))
    print(validate(E, S).summary())

    D = difference(K, E)
    banner("first dual K0 - E")
    print(ascii_lattice(D))
    print(validate(D).summary())

    DD = difference(K, D)
    banner("double dual K0 - (K0 - E)")
    print(ascii_lattice(DD))
    print("E contained in the double dual:", is_subset(E, DD))
    print("equal:", E == DD)
    print()
    print("The double dual is the closure of E in the duality; the")
    print("strict gap certifies that E was not a good ideal.")


if __name__ == "__main__":
    main()
