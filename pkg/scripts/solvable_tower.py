"""Derived depths and Jacobian sizes along the solvable-K gallery tower."""

import argparse
import time

from tautcert.certifier import certify_one_dim_generic, gallery, solvable_obstruction


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-k", type=int, default=3)
    args = ap.parse_args()
    print("K  genus  a-length  a-depth  other max  D*  generic 1-dim polynomial")
    for K in range(1, args.max_k + 1):
        start = time.perf_counter()
        p = gallery(f"solvable-{K}").presentation
        r = solvable_obstruction(p, K + 1)
        poly = certify_one_dim_generic(p).polynomial_text()
        print(
            f"{K}  {p.genus:5d}  {len(p.surface_words[0]):8d}  {r.depths[0]:7d}  {max(r.depths[1:]):9d}  {r.degree:2d}  {poly}"
            f"   ({time.perf_counter() - start:.2f}s)"
        )


if __name__ == "__main__":
    main()
