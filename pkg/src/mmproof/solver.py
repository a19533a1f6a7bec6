"""Exact minimal external path lengths.

Two independent routes:

* :func:`solve_star_free` works on symbolic star-free patterns using the
  pattern machinery (question generation by isomorphism, symbolic split);
* :class:`ConcreteSolver` is a brute-force oracle over explicit secret sets
  that tries every question over all ``n`` colors (plus the additional color
  when allowed).

Both are memoized on canonical keys.
"""

from __future__ import annotations

from fractions import Fraction

from .answers import answer_count, split_concrete, split_pattern
from .canon import canonical_concrete, canonical_pattern
from .pattern import ConcreteMaset, Game, MasetPattern, Question, normalize
from .questions import concrete_candidates, gen_questions

_star_free_memo: dict[tuple[Game, bytes], int] = {}


def solve_star_free(pattern: MasetPattern, just_guessed: bool = False) -> int:
    """Minimal external path length of a star-free pattern."""
    if pattern.has_star():
        raise ValueError("solve_star_free needs a pattern without stars")
    m = len(pattern.clauses)
    if just_guessed or m == 0:
        return 0
    if m == 1:
        return 1
    if m == 2:
        return 3
    pattern = normalize(pattern)
    pattern = pattern.with_deficit(pattern.num_colors)
    key = (pattern.game, canonical_pattern(pattern))
    if key in _star_free_memo:
        return _star_free_memo[key]
    last = answer_count(pattern.p) - 1
    best = None
    for q in gen_questions(pattern):
        children = split_pattern(pattern, q)
        if any(len(c.clauses) == m for k, c in enumerate(children) if k != last):
            continue
        total = m + sum(solve_star_free(c, k == last) for k, c in enumerate(children))
        if best is None or total < best:
            best = total
    if best is None:
        raise RuntimeError(f"no splitting question for {pattern}")
    _star_free_memo[key] = best
    return best


class NoSplittingQuestion(RuntimeError):
    pass


class ConcreteSolver:
    """Optimal expected-case play on explicit secret sets.

    ``L(S) = |S| + sum of L(child)`` minimized over questions, where the
    child of the all-black answer contributes nothing.  Questions with the
    same partition of ``S`` are interchangeable, so only one per partition
    is expanded; children are memoized on their canonical key.
    """

    def __init__(self) -> None:
        self.memo: dict[bytes, int] = {}
        self.best_question: dict[bytes, Question] = {}
        self._keys: dict[tuple, bytes] = {}
        self._candidates: dict[tuple, list[Question]] = {}

    def _key(self, maset: ConcreteMaset) -> bytes:
        k = (maset.p, maset.game, maset.n, maset.additional, maset.secrets)
        key = self._keys.get(k)
        if key is None:
            key = self._keys[k] = canonical_concrete(maset)
        return key

    def candidates(self, maset: ConcreteMaset) -> list[Question]:
        k = (maset.p, maset.game, maset.n, maset.additional)
        if k not in self._candidates:
            self._candidates[k] = concrete_candidates(maset)
        return self._candidates[k]

    def solve(self, maset: ConcreteMaset) -> int:
        size = len(maset.secrets)
        if size == 0:
            return 0
        if size == 1:
            return 1
        key = self._key(maset)
        if key in self.memo:
            return self.memo[key]
        last = answer_count(maset.p) - 1
        options = []
        seen = set()
        for q in self.candidates(maset):
            buckets = split_concrete(maset, q)
            if any(len(b) == size for k, b in enumerate(buckets) if k != last):
                continue
            sig = tuple(buckets)
            if sig in seen:
                continue
            seen.add(sig)
            bound = size + sum(2 * len(b) - 1 for k, b in enumerate(buckets) if b and k != last)
            options.append((bound, q, buckets))
        if not options:
            raise NoSplittingQuestion(f"no question splits {sorted(maset.secrets)}")
        best = None
        best_q = None
        for bound, q, buckets in options:
            if best is not None and bound >= best:
                continue
            total = size
            for k, b in enumerate(buckets):
                if k == last or not b:
                    continue
                total += self.solve(maset.with_secrets(b))
                if best is not None and total >= best:
                    break
            if best is None or total < best:
                best, best_q = total, q
        self.memo[key] = best
        self.best_question[key] = best_q
        return best


_default_solver = ConcreteSolver()


def solve_concrete(maset: ConcreteMaset, solver: ConcreteSolver | None = None) -> int:
    """Exact minimal external path length of a concrete maset (the oracle)."""
    return (solver or _default_solver).solve(maset)


def expected_questions(maset: ConcreteMaset, solver: ConcreteSolver | None = None) -> Fraction:
    if not maset.secrets:
        raise ValueError("expected number of questions is undefined for an empty maset")
    return Fraction(solve_concrete(maset, solver), len(maset.secrets))


def closed_form_mm(n: int) -> Fraction:
    """Minimal expected number of questions, two-peg Mastermind, ``n >= 3``."""
    if n < 3:
        raise ValueError("the Mastermind formula holds for n >= 3")
    if n % 2 == 0:
        return Fraction(8 * n**3 + 51 * n**2 - 74 * n + 48, 24 * n**2)
    return Fraction(8 * n**3 + 51 * n**2 - 80 * n + 69, 24 * n**2)


def closed_form_ab(n: int) -> Fraction:
    """Minimal expected number of questions, two-peg AB game, ``n >= 2``."""
    if n < 2:
        raise ValueError("the AB formula holds for n >= 2")
    if n % 2 == 0:
        return Fraction(4 * n**3 + 21 * n**2 - 76 * n + 72, 12 * n * (n - 1))
    return Fraction(4 * n**3 + 21 * n**2 - 82 * n + 105, 12 * n * (n - 1))
