"""Exhaustive short-word sweeps of the commutator-map lemmas.

Additivity: [gamma, g h] = [gamma, g][gamma, h] modulo G_{k+1}.
Disjointness: [gamma, g] and [delta, h] differ modulo G_{k+1} whenever
gamma and delta differ in homology.  Violations are listed, with those
where the homology classes are linearly independent marked separately.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from sweeps import additivity_sweep, disjointness_sweep  # noqa: E402
from tautcert.words import exponent_vector, format_word  # noqa: E402


def independent(u, v):
    a, b = exponent_vector(u), exponent_vector(v)
    return a[0] * b[1] - a[1] * b[0] != 0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--show", type=int, default=5, help="violations to print per k")
    args = ap.parse_args()
    for k in (2, 3):
        checked, bad = additivity_sweep(k)
        print(f"k={k} additivity: {checked - len(bad)}/{checked} hold")
        checked, bad = disjointness_sweep(k)
        indep = [b for b in bad if independent(b[0], b[2])]
        print(f"k={k} disjointness: {len(bad)} violations over {checked} pairs, {len(indep)} with independent classes")
        for gamma, g, delta, h, c in (indep or bad)[: args.show]:
            print(f"  [{format_word(gamma)}, {format_word(g)}] == [{format_word(delta)}, {format_word(h)}]  coords {c}")


if __name__ == "__main__":
    main()
