"""Generate random good semigroups and ideals and put them on display.

Useful for building intuition: every run draws fresh certified examples,
prints their frames and validation reports, and demonstrates the duality
involution on each.  Pass --seed for a reproducible gallery and --svg to
drop lattice pictures into the current directory.

Run:  python3 demos/random_gallery.py --seed 7 --count 3
"""

import argparse
import random

from goodsemi import (
    CanonicalIdeal,
    canonical_normalized,
    dualize,
    is_symmetric,
    random_pair,
    relative_distance,
    validate,
)
from goodsemi.plot import ascii_lattice, svg_lattice


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--count", type=int, default=3)
    ap.add_argument("--svg", action="store_true", help="also write SVG files")
    args = ap.parse_args()

    seed = args.seed if args.seed is not None else random.randrange(10**6)
    rng = random.Random(seed)
    print(f"gallery seed: {seed}")

    for k in range(args.count):
        S, E = random_pair(rng, 2, max_gamma=7, max_shift=2)
        print()
        print(f"### example {k + 1}")
        print(f"semigroup frame: {list(S.ideal.frame_sorted)}")
        print(ascii_lattice(S.ideal))
        print(f"symmetric: {is_symmetric(S)}")

        K = canonical_normalized(S)
        print(f"canonical frame: {list(K.frame_sorted)}")
        print(f"distance d(K0 \\ S) = {relative_distance(S.ideal, K)}")

        print(f"ideal frame: {list(E.frame_sorted)} (minimum {E.mu})")
        report = validate(E, S)
        print(report.summary())

        D = dualize(CanonicalIdeal.normalized(S), E)
        back = dualize(CanonicalIdeal.normalized(S), D)
        print(f"dual frame: {list(D.frame_sorted)}")
        print(f"dual of dual returns E: {back == E}")

        if args.svg:
            name = f"gallery_{seed}_{k + 1}.svg"
            with open(name, "w", encoding="utf-8") as fh:
                fh.write(svg_lattice(S.ideal))
            print(f"wrote {name}")


if __name__ == "__main__":
    main()
