"""Success rate of random F_p certification over the gallery."""

import argparse

from tautcert.certifier import certify_random, gallery


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    names = ["product-3", "gen2-multisuture", "genus3-derived2", "genus3-plus-handles-4", "solvable-1"]
    for name in names:
        pres = gallery(name).presentation
        for dim, p in ((1, 5), (1, 101), (2, 5), (2, 101)):
            r = certify_random(pres, dim, p, args.trials, args.seed)
            rate = "-" if r.witness_trial is None else f"first witness at trial {r.witness_trial}"
            print(f"{name:24s} dim {dim} F_{p:<4d} {r.status:12s} {rate}")


if __name__ == "__main__":
    main()
