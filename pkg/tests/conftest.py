import json
import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from tautcert.words import Alphabet, Word  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def frozen():
    return json.loads((DATA / "oracle_values.json").read_text())


def letters(rank: int, max_size: int = 12):
    gens = [a for i in range(1, rank + 1) for a in (i, -i)]
    return st.lists(st.sampled_from(gens), max_size=max_size)


def words(alphabet: Alphabet, max_size: int = 12):
    return letters(alphabet.rank, max_size).map(lambda l: Word(alphabet, l))


XY = Alphabet(("x", "y"))
XYZ = Alphabet(("x", "y", "z"))


# acceptance verdicts, one line per criterion, echoed after the run
ACCEPTANCE: dict[int, str] = {}


def record(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE[n] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
