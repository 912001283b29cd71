"""Derived-series membership in a free group.

``w`` lies in ``F^(d)`` exactly when it is trivial in the free solvable
quotient ``F / F^(d)``.  With ``N = F^(d-1)`` this holds iff ``w`` is trivial
in ``F / N`` and every Fox derivative of ``w`` vanishes in ``Z[F / N]``.

Elements of ``F / F^(d)`` get canonical keys level by level: the key of
``w`` at level ``d`` is its level-``d-1`` key together with its Fox
derivatives, each written as coefficients on level-``d-1`` keys.  Keys are
interned to small integers inside one call.  Every Fox term of ``w`` is a
prefix of ``w``, so one pass over the prefixes per level suffices.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..words import Word, exponent_vector


class ResourceBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ResourceBudget:
    max_word_length: int = 100_000
    max_depth: int = 6


DEFAULT_BUDGET = ResourceBudget()


class DerivedSeriesOracle:
    """Call-local canonical keys of prefixes of one word in ``F / F^(d)``."""

    def __init__(self, w: Word, budget: ResourceBudget = DEFAULT_BUDGET):
        if len(w) > budget.max_word_length:
            raise ResourceBudgetExceeded(
                f"word length {len(w)} exceeds the budget of {budget.max_word_length} letters"
            )
        self.word = w
        self.budget = budget
        self.rank = w.alphabet.rank
        self.levels: list[list] = []
        self.levels.append(self._level_one())

    def _level_one(self) -> list:
        vec = [0] * self.rank
        keys = [tuple(vec)]
        for a in self.word.signed:
            vec[abs(a) - 1] += 1 if a > 0 else -1
            keys.append(tuple(vec))
        return keys

    def _next_level(self, below: list) -> list:
        table: dict = {}

        def intern(obj):
            k = table.get(obj)
            if k is None:
                k = table[obj] = len(table)
            return k

        states = [dict() for _ in range(self.rank)]
        frozen = [frozenset()] * self.rank
        keys = [intern((below[0], tuple(frozen)))]
        for pos, a in enumerate(self.word.signed):
            g = abs(a) - 1
            cls = below[pos] if a > 0 else below[pos + 1]
            st = states[g]
            v = st.get(cls, 0) + (1 if a > 0 else -1)
            if v:
                st[cls] = v
            else:
                del st[cls]
            frozen[g] = frozenset(st.items())
            keys.append(intern((below[pos + 1], tuple(frozen))))
        return keys

    def keys(self, d: int) -> list:
        if d < 1:
            raise ValueError("levels start at 1")
        while len(self.levels) < d:
            if len(self.levels) + 1 > self.budget.max_depth:
                raise ResourceBudgetExceeded(
                    f"derived-series level {len(self.levels) + 1} exceeds the depth budget "
                    f"of {self.budget.max_depth}"
                )
            self.levels.append(self._next_level(self.levels[-1]))
        return self.levels[d - 1]

    def in_term(self, d: int) -> bool:
        """Is the whole word in ``F^(d)``?"""
        if d == 0 or self.word.is_identity():
            return True
        k = self.keys(d)
        return k[-1] == k[0]


def in_derived_term(w: Word, d: int, budget: ResourceBudget = DEFAULT_BUDGET) -> bool:
    return DerivedSeriesOracle(w, budget).in_term(d)


def derived_depth(w: Word, max_depth: int, budget: ResourceBudget = DEFAULT_BUDGET) -> int:
    """Largest ``d <= max_depth`` with ``w`` in ``F^(d)``."""
    if max_depth < 0:
        raise ValueError("max_depth must be nonnegative")
    if w.is_identity():
        return max_depth
    if any(exponent_vector(w)) or max_depth == 0:
        return 0
    oracle = DerivedSeriesOracle(w, budget)
    for d in range(2, max_depth + 1):
        if not oracle.in_term(d):
            return d - 1
    return max_depth


def equal_mod_derived(u: Word, v: Word, d: int, budget: ResourceBudget = DEFAULT_BUDGET) -> bool:
    return in_derived_term(u * v.inverse(), d, budget)
