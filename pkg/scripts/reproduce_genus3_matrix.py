"""Evaluate the genus-3 Jacobian under beta in all eight conventions.

Prints each convention's determinant and mismatch count against the
reference matrix, then the entrywise diff for the closest one.
"""

import json
from pathlib import Path

from tautcert.certifier import gallery
from tautcert.certifier.conventions import diff_text, search_conventions
from tautcert.certifier.gallery import GENUS3_WORDS

DATA = Path(__file__).resolve().parents[1] / "tests" / "data" / "oracle_values.json"


def main():
    target = json.loads(DATA.read_text())["paper_matrix"]
    e = gallery("genus3-derived2")
    results = search_conventions(e.presentation.alphabet, GENUS3_WORDS, e.representation, target)
    for r in results:
        print(f"{r.convention.describe():60s} det {str(r.det):>4}  mismatches {r.mismatches}")
    best = results[0]
    print(f"\nclosest: {best.convention.describe()}")
    print(diff_text(best.matrix, target))


if __name__ == "__main__":
    main()
