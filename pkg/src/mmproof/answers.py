"""Answers ``(b, w)``, their numbering, and splitting a maset by answer."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Sequence

from .pattern import STAR, ConcreteMaset, MasetPattern, Secret, extend

Answer = tuple[int, int]


def answer_count(p: int) -> int:
    if p < 1:
        raise ValueError("need at least one peg")
    return p * (p + 3) // 2


@lru_cache(maxsize=None)
def answers(p: int) -> tuple[Answer, ...]:
    """All feasible answers ordered by ``b + w``, then ``b``."""
    out = []
    for total in range(p + 1):
        for b in range(total + 1):
            if (b, total - b) != (p - 1, 1):
                out.append((b, total - b))
    assert len(out) == answer_count(p)
    return tuple(out)


@lru_cache(maxsize=None)
def _index_table(p: int) -> dict[Answer, int]:
    return {a: i for i, a in enumerate(answers(p))}


def answer_index(a: Answer, p: int) -> int:
    try:
        return _index_table(p)[tuple(a)]
    except KeyError:
        raise ValueError(f"answer {a} is impossible with {p} pegs") from None


def index_to_answer(k: int, p: int) -> Answer:
    table = answers(p)
    if not 0 <= k < len(table):
        raise ValueError(f"answer index {k} out of range for {p} pegs")
    return table[k]


def secret_answer(s: Sequence[int], q: Sequence[int]) -> Answer:
    """Black/white pegs for secret ``s`` and question ``q``.

    Only explicit colors (below ``STAR``) count; the additional color and
    stars match nothing.
    """
    b = 0
    sc: Counter[int] = Counter()
    qc: Counter[int] = Counter()
    for x, y in zip(s, q):
        if x == y and x < STAR:
            b += 1
        if x < STAR:
            sc[x] += 1
        if y < STAR:
            qc[y] += 1
    common = sum(min(k, qc[c]) for c, k in sc.items() if c in qc)
    return b, common - b


def clause_answer(clause: Sequence[int], q: Sequence[int], deficit: int | None = None) -> Answer:
    """Answer shared by every secret of ``clause``.

    When ``deficit`` is given, question colors must be below it so that no
    star can take a question color.
    """
    if deficit is not None and any(x >= deficit for x in q if x < STAR):
        raise ValueError(f"question {tuple(q)} uses a color at or above the deficit {deficit}")
    return secret_answer(clause, q)


def extension_target(q: Sequence[int]) -> int:
    """``v`` such that ``v - 1`` is the largest explicit color of ``q`` (0 if none)."""
    explicit = [x for x in q if x < STAR]
    return max(explicit) + 1 if explicit else 0


def extend_for(pattern: MasetPattern, q: Sequence[int]) -> MasetPattern:
    v = extension_target(q)
    if v > pattern.num_colors:
        return extend(pattern, v)
    return pattern


def split_pattern(pattern: MasetPattern, q: Sequence[int]) -> list[MasetPattern]:
    """Children of ``pattern`` after asking ``q``, one per answer index.

    The pattern is first extended so that every color of ``q`` is explicit.
    Each child keeps the (possibly extended) deficit and is not normalized.
    """
    ext = extend_for(pattern, q)
    if ext.has_star():
        for x in q:
            if x < STAR and x >= ext.deficit:
                raise ValueError(f"question color {x} collides with the star colors")
    table = _index_table(pattern.p)
    buckets: list[list[tuple[int, ...]]] = [[] for _ in range(len(table))]
    for clause in ext.clauses:
        buckets[table[secret_answer(clause, q)]].append(clause)
    return [MasetPattern(ext.p, ext.game, ext.deficit, tuple(b)) for b in buckets]


def split_concrete(maset: ConcreteMaset, q: Sequence[int]) -> list[frozenset[Secret]]:
    table = _index_table(maset.p)
    buckets: list[list[Secret]] = [[] for _ in range(len(table))]
    for s in maset.secrets:
        buckets[table[secret_answer(s, q)]].append(s)
    return [frozenset(b) for b in buckets]
