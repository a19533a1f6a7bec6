"""Pairwise non-isomorphic questions for a pattern or a concrete maset."""

from __future__ import annotations

import itertools

from .answers import answer_count, split_concrete
from .canon import canonical_concrete, canonical_with_question
from .pattern import ADD, ConcreteMaset, Game, MasetPattern, Question


def legal_question(game: Game, q: Question) -> bool:
    """Not all-additional; in AB no explicit color repeats (the additional one may)."""
    if all(x == ADD for x in q):
        return False
    if game is Game.AB:
        named = [x for x in q if x != ADD]
        return len(set(named)) == len(named)
    return True


def _fresh_in_order(q: Question, u: int) -> bool:
    # fresh colors u, u+1, ... must be introduced in ascending order
    nxt = u
    for x in q:
        if x == ADD or x < u:
            continue
        if x > nxt:
            return False
        if x == nxt:
            nxt += 1
    return True


def candidate_questions(game: Game, p: int, u: int, additional: bool = True) -> list[Question]:
    """Every legal question over ``u`` explicit, ``p`` fresh and the additional color.

    Listed in ascending lexicographic order.
    """
    symbols = list(range(u + p)) + ([ADD] if additional else [])
    out = []
    for q in itertools.product(symbols, repeat=p):
        if not legal_question(game, q):
            continue
        if not _fresh_in_order(q, u):
            continue
        out.append(q)
    return out


def gen_questions(pattern: MasetPattern) -> list[Question]:
    """One representative per isomorphism class of (pattern, question).

    The representative is the lexicographically smallest candidate of its
    class, and the list is sorted.
    """
    seen: set[bytes] = set()
    out = []
    for q in candidate_questions(pattern.game, pattern.p, pattern.num_colors):
        key = canonical_with_question(pattern, q)
        if key not in seen:
            seen.add(key)
            out.append(q)
    return out


def concrete_candidates(maset: ConcreteMaset) -> list[Question]:
    symbols = list(range(maset.n)) + ([ADD] if maset.additional else [])
    out = []
    for q in itertools.product(symbols, repeat=maset.p):
        if legal_question(maset.game, q):
            out.append(q)
    return out


def is_splitting(buckets: list[frozenset], size: int, p: int) -> bool:
    """False when the question leaves the maset whole outside the guessed bucket."""
    last = answer_count(p) - 1
    return not any(len(b) == size for k, b in enumerate(buckets) if k != last)


def gen_questions_concrete(maset: ConcreteMaset) -> list[Question]:
    """Splitting questions for a concrete maset, one per symmetry class."""
    seen: set[bytes] = set()
    out = []
    for q in concrete_candidates(maset):
        if not is_splitting(split_concrete(maset, q), len(maset), maset.p):
            continue
        key = canonical_concrete(maset, q)
        if key not in seen:
            seen.add(key)
            out.append(q)
    return out
