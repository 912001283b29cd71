"""Compute every derived reference value with the slow oracles and freeze it.

The oracles live in tests/oracles.py and share no code with the package
algorithms.  Output: tests/data/oracle_values.json.  Rerun only when a
reference value is added; the tests read the frozen file.
"""

import json
import sys
import time
from itertools import product
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

import oracles as O  # noqa: E402

X, Y, Z = 1, 2, 3
PAPER_MATRIX = [
    [-18, -12, 48, -1, 13, -16],
    [29, 19, -76, 2, -20, 25],
    [0, -2, -4, 3, 0, 0],
    [1, 3, 4, -4, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
]


def genus3_words():
    xy = O.comm((X,), (Y,))
    xiy = O.comm((-X,), (Y,))
    yix = O.comm((-Y,), (X,))
    yx = O.comm((Y,), (X,))
    A = O.reduce_word(xy + xiy)
    B = O.reduce_word((Z,) + yix + yx + (-Z,))
    a = O.comm(A, B)
    b = O.reduce_word(xy + O.comm((-Y,), (-X,)))
    return a, b, (Z,)


def solvable_words(K):
    """The tower built directly on tuples (independent of the gallery code)."""
    rank, words, ia, ib = 2, [(1,), (2,)], 0, 1
    for _ in range(K):
        r = rank

        def shift(w, off):
            return tuple(a + off if a > 0 else a - off for a in w)

        t = (2 * r + 1,)
        a1, a2 = shift(words[ia], 0), shift(words[ia], r)
        new = [O.comm(a1, a2), O.reduce_word(a1 + t + a2), t]
        for off, aj in ((0, a1), (r, a2)):
            for j, w in enumerate(words):
                if j == ia:
                    continue
                cw = shift(w, off)
                new.append(O.reduce_word(aj + cw + O.inv(aj)) if j == ib else cw)
        rank, words, ia, ib = 2 * r + 1, new, 0, 2
    return rank, words


def poly_str(d):
    return {"".join(map(str, k)) if isinstance(k, tuple) else str(k): v for k, v in sorted(d.items())}


def main():
    t0 = time.time()
    out = {}
    out["paper_matrix"] = PAPER_MATRIX
    out["paper_matrix_det_cofactor"] = O.cofactor_det(PAPER_MATRIX)
    out["parse_x^-2(yx)^2"] = list(O.reduce_word(O.power((X,), -2) + O.power((Y, X), 2)))
    out["fox_comm_xy"] = [
        {str(list(k)): v for k, v in sorted(O.fox_oracle(O.comm((X,), (Y,)), i).items())} for i in range(2)
    ]
    out["fox_x3"] = {str(list(k)): v for k, v in sorted(O.fox_oracle((X, X, X), 0).items())}
    out["magnus_comm_xy_D2"] = {str(list(k)): v for k, v in sorted(O.magnus_oracle(O.comm((X,), (Y,)), 2).items())}
    out["lcs_weight_x_xy"] = O.lcs_weight_oracle(O.comm((X,), O.comm((X,), (Y,))), 6)
    dd = O.comm(O.comm((X,), (Y,)), O.comm((-X,), (Y,)))
    out["lcs_weight_comm_comm"] = O.lcs_weight_oracle(dd, 6)
    out["witt_rank2"] = [O.necklace_count(2, k) for k in range(1, 7)]
    out["witt_rank3"] = [O.necklace_count(3, k) for k in range(1, 5)]
    m = O.magnus_oracle(O.power(O.comm((X,), (Y,)), 3), 2)
    out["comm_xy_cubed_deg2"] = {str(list(k)): v for k, v in sorted(m.items()) if len(k) == 2}
    m = O.magnus_oracle((X, Y, -X), 2)
    out["xyx^-1_magnus_D2"] = {str(list(k)): v for k, v in sorted(m.items())}
    # x y x^-1 = y [y^-1, x] ... check: y^-1 (x y x^-1) has Magnus 1 + XY - YX at degree 2
    m = O.magnus_oracle(O.reduce_word((-Y, X, Y, -X)), 2)
    out["y^-1xyx^-1_magnus_D2"] = {str(list(k)): v for k, v in sorted(m.items())}

    a, b, c = genus3_words()
    out["genus3_words"] = [list(a), list(b), list(c)]
    out["genus3_depths"] = [O.derived_depth_oracle(w, 3, 3) for w in (a, b, c)]
    out["comm_comm_depth"] = O.derived_depth_oracle(dd, 3, 2)
    out["genus3_abelian_row_a"] = [len(p) for p in O.abelian_row_oracle(a, 3)]

    depths = {}
    for K in (1, 2, 3):
        rank, words = solvable_words(K)
        depths[K] = {
            "rank": rank,
            "a_length": len(words[0]),
            "a_depth": O.derived_depth_oracle(words[0], K + 1, rank),
            "a_word": list(words[0]),
        }
    out["solvable"] = {str(k): v for k, v in depths.items()}

    # 1 - a b over F_5^*: pairs with nonzero determinant
    out["gen2_f5_successes"] = sum((1 - a * b) % 5 != 0 for a, b in product(range(1, 5), repeat=2))

    # gen2-multisuture surface words of length <= 2 with nonzero surface exponent
    imgs = {1: (X, Y), 2: (Y, X)}
    worst = 0
    for n in (1, 2):
        for w in product((1, -1, 2, -2), repeat=n):
            if O.reduce_word(w) != w:
                continue
            e = [sum(1 if a == g else -1 if a == -g else 0 for a in w) for g in (1, 2)]
            if not any(e):
                continue
            img = O.reduce_word(sum((imgs[a] if a > 0 else O.inv(imgs[-a]) for a in w), ()))
            worst = max(worst, O.derived_depth_oracle(img, 2, 2))
    out["gen2_short_words_max_depth"] = worst

    path = ROOT / "tests" / "data" / "oracle_values.json"
    path.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")
    print(f"wrote {path} in {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
