"""Canonical forms of symbol tables under row, column and color permutations.

Patterns, pattern+question pairs and concrete secret sets are all tables whose
entries are either *free* colors (permutable ints below ``STAR``) or fixed
symbols (``STAR``, ``ADD``).  Rows of the body are an unordered multiset;
pinned rows (a question) keep their place.

The canonical form is the minimum certificate over the leaves of an
individualization-refinement search, taken over every column permutation.
Colors that are twins (their transposition is an automorphism) lead to
identical subtrees, so only one twin per class is branched on.
"""

from __future__ import annotations

import itertools
import struct
from typing import Sequence

from .pattern import ADD, STAR, ConcreteMaset, MasetPattern

Row = tuple[int, ...]
Certificate = tuple[tuple[Row, ...], tuple[Row, ...]]

_SELF = -1


def _refine(rank: dict[int, int], occ: dict[int, list[tuple[int, Row]]]) -> dict[int, int]:
    """Equitable refinement of a color ranking.

    ``occ[c]`` lists ``(kind, row)`` for every row containing ``c``; ``kind`` is
    0 for body rows and ``j + 1`` for pinned row ``j``.
    """
    ncells = len(set(rank.values()))
    while True:
        sigs = {}
        for c, rows in occ.items():
            descr = sorted(
                (kind, tuple(_SELF if x == c else (rank[x] if x < STAR else x) for x in row))
                for kind, row in rows
            )
            sigs[c] = (rank[c], descr)
        order = sorted(set(map(_freeze, sigs.values())))
        index = {s: i for i, s in enumerate(order)}
        new_rank = {c: index[_freeze(s)] for c, s in sigs.items()}
        if len(order) == ncells:
            return new_rank
        rank, ncells = new_rank, len(order)


def _freeze(sig):
    r, descr = sig
    return (r, tuple(descr))


def _relabel(rows: Sequence[Row], mapping: dict[int, int]) -> list[Row]:
    return [tuple(mapping.get(x, x) for x in row) for row in rows]


def _is_twin(a: int, b: int, body_sorted: list[Row], pinned: Sequence[Row]) -> bool:
    swap = {a: b, b: a}
    if _relabel(pinned, swap) != list(pinned):
        return False
    return sorted(_relabel(body_sorted, swap)) == body_sorted


def _search(body: list[Row], pinned: list[Row]) -> Certificate:
    colors = sorted({x for row in itertools.chain(body, pinned) for x in row if x < STAR})
    occ: dict[int, list[tuple[int, Row]]] = {c: [] for c in colors}
    for kind, rows in ((0, body),) + tuple((j + 1, [r]) for j, r in enumerate(pinned)):
        for row in rows:
            for c in set(x for x in row if x < STAR):
                occ[c].append((kind, row))
    body_sorted = sorted(body)
    best: list[Certificate | None] = [None]

    def leaf(rank: dict[int, int]) -> None:
        cert = (tuple(sorted(_relabel(body, rank))), tuple(_relabel(pinned, rank)))
        if best[0] is None or cert < best[0]:
            best[0] = cert

    def visit(rank: dict[int, int]) -> None:
        rank = _refine(rank, occ)
        cells: dict[int, list[int]] = {}
        for c, r in rank.items():
            cells.setdefault(r, []).append(c)
        target = next((cells[r] for r in sorted(cells) if len(cells[r]) > 1), None)
        if target is None:
            leaf(rank)
            return
        reps: list[int] = []
        for c in sorted(target):
            if not any(_is_twin(c, r, body_sorted, pinned) for r in reps):
                reps.append(c)
        for c in reps:
            # c goes first within its cell; ranks stay dense after the next refine
            visit({x: 2 * r + (0 if x == c else 1) for x, r in rank.items()})

    visit({c: 0 for c in colors})
    assert best[0] is not None
    return best[0]


def canonical_table(body: Sequence[Row], pinned: Sequence[Row] = (), width: int | None = None) -> Certificate:
    """Minimum certificate of a table over all column and color permutations."""
    if width is None:
        width = len(body[0]) if body else (len(pinned[0]) if pinned else 0)
    best: Certificate | None = None
    for perm in itertools.permutations(range(width)):
        pb = [tuple(row[i] for i in perm) for row in body]
        pp = [tuple(row[i] for i in perm) for row in pinned]
        cert = _search(pb, pp)
        if best is None or cert < best:
            best = cert
    assert best is not None
    return best


def _code(x: int) -> int:
    if x == STAR:
        return 254
    if x == ADD:
        return 255
    if not 0 <= x < 254:
        raise ValueError(f"color {x} does not fit a key byte")
    return x


def encode_certificate(header: Sequence[int], cert: Certificate) -> bytes:
    body, pinned = cert
    out = bytearray(struct.pack(f">{len(header)}H", *header))
    out += struct.pack(">HH", len(body), len(pinned))
    for row in itertools.chain(body, pinned):
        out += bytes(_code(x) for x in row)
    return bytes(out)


def canonical_pattern(pattern: MasetPattern) -> bytes:
    """Isomorphism-class key of a pattern; star indices are ignored."""
    cert = canonical_table(pattern.clauses, (), pattern.p)
    return encode_certificate((pattern.p,), cert)


def canonical_with_question(pattern: MasetPattern, q: Sequence[int]) -> bytes:
    """Key of a pattern with the question appended as a pinned row."""
    cert = canonical_table(pattern.clauses, (tuple(q),), pattern.p)
    return encode_certificate((pattern.p,), cert)


def canonical_concrete(maset: ConcreteMaset, q: Sequence[int] | None = None) -> bytes:
    """Key of a concrete secret set under color and peg-position permutations.

    The color count, variant and additional-color flag are part of the key.
    """
    pinned = () if q is None else (tuple(q),)
    cert = canonical_table(sorted(maset.secrets), pinned, maset.p)
    header = (maset.p, maset.n, 1 if maset.game.value == "AB" else 0, int(maset.additional))
    return encode_certificate(header, cert)
