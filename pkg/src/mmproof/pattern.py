"""Symbolic maset patterns and their basic transformations.

A pattern is a union of clauses.  Each clause is a tuple of ``p`` symbols:
explicit colors (small non-negative ints) or :data:`STAR`.  Every star in a
pattern stands for the same ``n - t`` colors ``{t, ..., n-1}``, where ``t``
is the pattern's *deficit*.  Questions reuse the same integer encoding and may
also contain :data:`ADD`, the question-only additional color.

Symbols are plain ints so that tuples sort in the natural order
``0 < 1 < ... < STAR < ADD``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .polynomial import Polynomial, falling

STAR = 1 << 16
ADD = STAR + 1

Clause = tuple[int, ...]
Question = tuple[int, ...]
Secret = tuple[int, ...]


class Game(str, enum.Enum):
    MM = "MM"
    AB = "AB"

    @classmethod
    def parse(cls, text: str) -> Game:
        try:
            return cls(text.upper())
        except ValueError:
            raise ValueError(f"unknown game {text!r}; expected mm or ab") from None


def is_explicit(symbol: int) -> bool:
    return 0 <= symbol < STAR


def clause_colors(clause: Iterable[int]) -> list[int]:
    return [x for x in clause if x < STAR]


@dataclass(frozen=True)
class MasetPattern:
    p: int
    game: Game
    deficit: int
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        for clause in self.clauses:
            if len(clause) != self.p:
                raise ValueError(f"clause {clause} does not have {self.p} pegs")
            for x in clause:
                if x == ADD:
                    raise ValueError("the additional color cannot occur in a clause")
                if x != STAR and not 0 <= x < self.deficit:
                    raise ValueError(
                        f"explicit color {x} is not below the deficit {self.deficit}"
                    )
            if self.game is Game.AB:
                explicit = clause_colors(clause)
                if len(set(explicit)) != len(explicit):
                    raise ValueError(f"AB clause {clause} repeats a color")

    @classmethod
    def full(cls, game: Game, p: int) -> MasetPattern:
        """The all-stars pattern: every secret of the game."""
        return cls(p, game, 0, ((STAR,) * p,))

    @property
    def colors(self) -> set[int]:
        return {x for c in self.clauses for x in c if x < STAR}

    @property
    def num_colors(self) -> int:
        return len(self.colors)

    def has_star(self) -> bool:
        return any(STAR in c for c in self.clauses)

    def is_empty(self) -> bool:
        return not self.clauses

    def is_normalized(self) -> bool:
        return self.colors == set(range(self.num_colors))

    def is_tight(self) -> bool:
        return self.is_normalized() and self.deficit == self.num_colors

    def with_deficit(self, deficit: int) -> MasetPattern:
        return MasetPattern(self.p, self.game, deficit, self.clauses)

    def __str__(self) -> str:
        return format_pattern(self)


def format_symbol(x: int, deficit: int = 0, latex: bool = False) -> str:
    if x == STAR:
        return "*_{n}" if deficit == 0 else f"*_{{n-{deficit}}}"
    if x == ADD:
        return "\\mbox{a}" if latex else "a"
    return str(x)


def format_pattern(pattern: MasetPattern, deficit: int | None = None, latex: bool = False) -> str:
    """Render as ``(0,*_{n-2}) | (1,1)``; ``\\emptyset`` when empty.

    ``latex`` separates clauses with ``\\mid`` instead of ``|``.
    """
    if not pattern.clauses:
        return "\\emptyset"
    t = pattern.deficit if deficit is None else deficit
    sep = " \\mid " if latex else " | "
    return sep.join("(" + ",".join(format_symbol(x, t) for x in c) + ")" for c in pattern.clauses)


def format_question(q: Sequence[int], latex: bool = False) -> str:
    return "(" + ",".join(format_symbol(x, latex=latex) for x in q) + ")"


def normalize(pattern: MasetPattern) -> MasetPattern:
    """Compact explicit colors to ``0..u-1``, keeping their relative order.

    A pattern whose colors already are ``0..u-1`` is returned unchanged.
    """
    used = sorted(pattern.colors)
    if used == list(range(len(used))):
        return pattern
    mapping = {c: i for i, c in enumerate(used)}
    clauses = tuple(tuple(mapping.get(x, x) for x in c) for c in pattern.clauses)
    return MasetPattern(pattern.p, pattern.game, pattern.deficit, clauses)


def tighten(pattern: MasetPattern) -> tuple[MasetPattern, int]:
    """Drop the dead colors of a normalized pattern.

    Returns the pattern with deficit ``u`` and the shift ``r = t - u``: the
    input instantiated at ``n`` matches the result instantiated at ``n - r``.
    """
    if not pattern.is_normalized():
        raise ValueError("tighten needs a normalized pattern")
    u = pattern.num_colors
    r = pattern.deficit - u
    if r < 0:
        raise ValueError("deficit is smaller than the number of explicit colors")
    if r == 0:
        return pattern, 0
    return pattern.with_deficit(u), r


def extend(pattern: MasetPattern, v: int) -> MasetPattern:
    """Name ``v - u`` further colors: each star becomes ``u..v-1`` or a smaller star.

    Only defined for tight patterns (or star-free ones, which are unchanged
    apart from the deficit); the new deficit is ``t - u + v``.
    """
    u = pattern.num_colors
    if v <= u:
        raise ValueError(f"extension target {v} must exceed the {u} explicit colors")
    if not pattern.is_normalized():
        raise ValueError("extend needs a normalized pattern")
    if pattern.has_star() and pattern.deficit != u:
        raise ValueError("extend needs a tight pattern")
    choices = (*range(u, v), STAR)
    ab = pattern.game is Game.AB
    out: list[Clause] = []
    for clause in pattern.clauses:
        stars = [i for i, x in enumerate(clause) if x == STAR]
        if not stars:
            out.append(clause)
            continue
        for combo in itertools.product(choices, repeat=len(stars)):
            if ab:
                named = [x for x in combo if x != STAR]
                if len(set(named)) != len(named):
                    continue
            new = list(clause)
            for i, x in zip(stars, combo):
                new[i] = x
            out.append(tuple(new))
    return MasetPattern(pattern.p, pattern.game, pattern.deficit - u + v, tuple(out))


def count_secrets(pattern: MasetPattern) -> Polynomial:
    """Number of represented secrets as a polynomial in ``n``."""
    free = Polynomial.n_minus(pattern.deficit)
    total = Polynomial()
    for clause in pattern.clauses:
        k = clause.count(STAR)
        if pattern.game is Game.AB:
            total = total + falling(free, k)
        else:
            total = total + free**k
    return total


@dataclass(frozen=True)
class ConcreteMaset:
    """An explicit set of secrets over colors ``0..n-1``."""

    p: int
    game: Game
    n: int
    secrets: frozenset[Secret]
    additional: bool = True

    def __post_init__(self) -> None:
        for s in self.secrets:
            if len(s) != self.p or any(not 0 <= x < self.n for x in s):
                raise ValueError(f"secret {s} is not a {self.p}-tuple over {self.n} colors")
            if self.game is Game.AB and len(set(s)) != self.p:
                raise ValueError(f"AB secret {s} repeats a color")

    def __len__(self) -> int:
        return len(self.secrets)

    def with_secrets(self, secrets: Iterable[Secret]) -> ConcreteMaset:
        return ConcreteMaset(self.p, self.game, self.n, frozenset(secrets), self.additional)

    @classmethod
    def full(cls, game: Game, p: int, n: int, additional: bool = True) -> ConcreteMaset:
        secrets = itertools.product(range(n), repeat=p)
        if game is Game.AB:
            secrets = (s for s in secrets if len(set(s)) == p)
        return cls(p, game, n, frozenset(secrets), additional)


def instantiate_clause(clause: Clause, game: Game, deficit: int, n: int) -> list[Secret]:
    stars = [i for i, x in enumerate(clause) if x == STAR]
    pool = range(deficit, n)
    if game is Game.AB:
        combos = itertools.permutations(pool, len(stars))
    else:
        combos = itertools.product(pool, repeat=len(stars))
    out = []
    for combo in combos:
        s = list(clause)
        for i, x in zip(stars, combo):
            s[i] = x
        out.append(tuple(s))
    return out


def instantiate(pattern: MasetPattern, n: int, additional: bool = True) -> ConcreteMaset:
    """The concrete secret set of ``pattern`` in a game with ``n`` colors."""
    if n < pattern.deficit:
        raise ValueError(f"cannot instantiate a pattern with deficit {pattern.deficit} at n={n}")
    secrets: set[Secret] = set()
    for clause in pattern.clauses:
        secrets.update(instantiate_clause(clause, pattern.game, pattern.deficit, n))
    return ConcreteMaset(pattern.p, pattern.game, n, frozenset(secrets), additional)
