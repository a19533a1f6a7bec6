"""Small constructors shared by the tests."""

from __future__ import annotations

import itertools
import random

from mmproof.pattern import ADD, STAR, ConcreteMaset, Game, MasetPattern

S = STAR
A = ADD


def pat(*clauses, deficit: int | None = None, game: Game = Game.MM) -> MasetPattern:
    """``pat((0, S), (S, 0))``; the deficit defaults to the tight value."""
    if deficit is None:
        deficit = len({x for c in clauses for x in c if x != STAR})
    p = len(clauses[0]) if clauses else 2
    return MasetPattern(p, game, deficit, tuple(clauses))


def concrete(secrets, n: int, game: Game = Game.MM, additional: bool = True) -> ConcreteMaset:
    secrets = frozenset(tuple(s) for s in secrets)
    p = len(next(iter(secrets)))
    return ConcreteMaset(p, game, n, secrets, additional)


def permute_pattern(pattern: MasetPattern, rng: random.Random) -> MasetPattern:
    """Random row, column and explicit-color permutation."""
    cols = list(range(pattern.p))
    rng.shuffle(cols)
    colors = sorted(pattern.colors)
    image = colors[:]
    rng.shuffle(image)
    cmap = dict(zip(colors, image))
    rows = [tuple(cmap.get(c[j], c[j]) for j in cols) for c in pattern.clauses]
    rng.shuffle(rows)
    return MasetPattern(pattern.p, pattern.game, pattern.deficit, tuple(rows))


def permute_secrets(maset: ConcreteMaset, rng: random.Random) -> ConcreteMaset:
    cols = list(range(maset.p))
    rng.shuffle(cols)
    cmap = list(range(maset.n))
    rng.shuffle(cmap)
    return maset.with_secrets(tuple(cmap[s[j]] for j in cols) for s in maset.secrets)


def brute_isomorphic(a: MasetPattern, b: MasetPattern) -> bool:
    """Exhaustive search for a column and color permutation mapping a onto b."""
    if a.p != b.p or len(a.clauses) != len(b.clauses) or a.num_colors != b.num_colors:
        return False
    target = sorted(b.clauses)
    ca, cb = sorted(a.colors), sorted(b.colors)
    for cols in itertools.permutations(range(a.p)):
        for image in itertools.permutations(cb):
            cmap = dict(zip(ca, image))
            rows = sorted(tuple(cmap.get(c[j], c[j]) for j in cols) for c in a.clauses)
            if rows == target:
                return True
    return False
