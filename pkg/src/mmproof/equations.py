"""The pattern queue, recursive equations, and their numeric evaluation.

``derive`` runs the breadth-first closure over maset patterns: every pattern
in the queue is split by each of its non-isomorphic questions, unseen
star-containing children are appended (tight and normalized), and every
(pattern, question) pair yields one equation

    A_i(n) = sum_l A_l(n - r_l) + W(n).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .answers import answer_count, extension_target, split_pattern
from .canon import canonical_pattern
from .pattern import (
    ConcreteMaset,
    Game,
    MasetPattern,
    Question,
    count_secrets,
    format_question,
    instantiate,
    normalize,
    tighten,
)
from .polynomial import Polynomial
from .questions import gen_questions
from .solver import ConcreteSolver, solve_concrete, solve_star_free

log = logging.getLogger(__name__)

INF = float("inf")


@dataclass(frozen=True)
class Term:
    index: int
    shift: int


@dataclass(frozen=True)
class Child:
    """One answer's outcome as shown in listings.

    Star-containing children carry the normalized form, the queue index of
    their isomorphism class and the shift; star-free ones carry their
    minimal external path length.
    """

    answer: int
    raw: MasetPattern
    normalized: MasetPattern | None = None
    queue_index: int | None = None
    shift: int | None = None
    length: int | None = None


@dataclass(frozen=True)
class Equation:
    id: str
    pattern_index: int
    number: int
    question: Question
    terms: tuple[Term, ...]
    w: Polynomial
    valid_from: int
    children: tuple[Child, ...] = ()

    def rhs(self, value: Callable[[int, int], int | None], n: int) -> int | None:
        """Right-hand side at ``n``; None if not applicable there."""
        if n < self.valid_from:
            return None
        total = self.w(n)
        for t in self.terms:
            v = value(t.index, n - t.shift)
            if v is None:
                return None
            total += v
        return total


@dataclass
class DerivationOutput:
    game: Game
    p: int
    queue: list[MasetPattern]
    equations: list[Equation]

    def equations_for(self, i: int) -> list[Equation]:
        return [e for e in self.equations if e.pattern_index == i]

    @property
    def max_shift(self) -> int:
        return max((t.shift for e in self.equations for t in e.terms), default=0)


class DerivationError(RuntimeError):
    pass


def equation_id(game: Game, p: int, i: int, j: int) -> str:
    return f"{game.value}.{p}.{i}.{j}"


def build_equation(
    out_game: Game,
    i: int,
    j: int,
    pattern: MasetPattern,
    q: Question,
    children: Sequence[MasetPattern],
    index: Mapping[bytes, int],
) -> Equation:
    """Assemble the equation of ``pattern`` (queue entry ``i``) for question ``q``.

    ``index`` maps canonical keys to queue positions; every star-containing
    child must already be present.
    """
    last = answer_count(pattern.p) - 1
    terms = []
    infos = []
    w = count_secrets(pattern)
    for k, child in enumerate(children):
        if child.has_star():
            norm = normalize(child)
            tight, r = tighten(norm)
            key = canonical_pattern(tight)
            if key not in index:
                raise DerivationError(f"child {child} of pattern {i} is not in the queue")
            l = index[key]
            terms.append(Term(l, r))
            infos.append(Child(k, child, norm, l, r))
        else:
            length = solve_star_free(child, k == last)
            w = w + length
            infos.append(Child(k, child, length=length))
    valid_from = max(pattern.num_colors, extension_target(q))
    return Equation(
        equation_id(out_game, pattern.p, i, j), i, j, tuple(q), tuple(terms), w, valid_from, tuple(infos)
    )


def derive(game: Game, p: int) -> DerivationOutput:
    """Breadth-first closure of the pattern queue with one equation per question."""
    if p < 1:
        raise ValueError("need at least one peg")
    root = MasetPattern.full(game, p)
    queue = [root]
    index = {canonical_pattern(root): 0}
    equations: list[Equation] = []
    i = 0
    while i < len(queue):
        pattern = queue[i]
        for j, q in enumerate(gen_questions(pattern), start=1):
            children = split_pattern(pattern, q)
            for child in children:
                if not child.has_star():
                    continue
                tight, _ = tighten(normalize(child))
                key = canonical_pattern(tight)
                if key not in index:
                    index[key] = len(queue)
                    queue.append(tight)
            equations.append(build_equation(game, i, j, pattern, q, children, index))
        log.debug("pattern %d done, queue size %d", i, len(queue))
        i += 1
    return DerivationOutput(game, p, queue, equations)


def count_derivation(game: Game, p: int, progress: Callable[[int, int, int], None] | None = None) -> tuple[int, int]:
    """Number of queue patterns and equations, without building the equations."""
    root = MasetPattern.full(game, p)
    queue = [root]
    index = {canonical_pattern(root)}
    child_keys: dict[tuple, bytes] = {}
    n_equations = 0
    i = 0
    while i < len(queue):
        pattern = queue[i]
        questions = gen_questions(pattern)
        n_equations += len(questions)
        for q in questions:
            for child in split_pattern(pattern, q):
                if not child.has_star():
                    continue
                tight, _ = tighten(normalize(child))
                key = child_keys.get(tight.clauses)
                if key is None:
                    key = child_keys[tight.clauses] = canonical_pattern(tight)
                if key not in index:
                    index.add(key)
                    queue.append(tight)
        i += 1
        if progress is not None:
            progress(i, len(queue), n_equations)
    return len(queue), n_equations


# -- numeric evaluation ----------------------------------------------------


class EvaluationError(RuntimeError):
    pass


def oracle_value(
    pattern: MasetPattern, n: int, solver: ConcreteSolver | None = None, additional: bool = True
) -> int | None:
    """Oracle external path length of ``pattern`` at ``n`` colors; None below its deficit."""
    if n < pattern.deficit:
        return None
    return solve_concrete(instantiate(pattern, n, additional), solver)


def oracle_base(out: DerivationOutput, n_max: int, solver: ConcreteSolver | None = None) -> dict[tuple[int, int], int]:
    base = {}
    for i, pattern in enumerate(out.queue):
        for n in range(pattern.deficit, n_max + 1):
            base[(i, n)] = oracle_value(pattern, n, solver)
    return base


def eval_system(
    out: DerivationOutput,
    n_max: int,
    base: Mapping[tuple[int, int], int] | None = None,
    solver: ConcreteSolver | None = None,
) -> dict[int, list[int | None]]:
    """Least solution of ``A_i(n) = min_j RHS_j(n)`` for every ``n <= n_max``.

    Values for ``n`` up to the largest shift come from ``base`` (computed by
    the oracle when omitted).  Larger ``n`` are relaxed from +infinity, with
    same-``n`` references resolved iteratively.  Returns ``{n: [A_0, A_1, ...]}``.
    """
    start = out.max_shift
    if base is None:
        base = oracle_base(out, min(start, n_max), solver)
    size = len(out.queue)
    table: dict[int, list[int | None]] = {}
    for n in range(0, min(start, n_max) + 1):
        table[n] = [base.get((i, n)) for i in range(size)]
    by_pattern = [out.equations_for(i) for i in range(size)]
    counts = [count_secrets(pat) for pat in out.queue]

    for n in range(start + 1, n_max + 1):
        fixed: list[int | None] = [0 if n >= pat.deficit and counts[i](n) == 0 else None for i, pat in enumerate(out.queue)]
        cur: list[float] = [INF if v is None else v for v in fixed]

        def value(l: int, m: int) -> float | None:
            if m == n:
                return cur[l]
            return table.get(m, [None] * size)[l]

        for _ in range(size + 1):
            new = list(cur)
            for i in range(size):
                if fixed[i] is not None or n < out.queue[i].deficit:
                    continue
                for eq in by_pattern[i]:
                    v = eq.rhs(value, n)
                    if v is not None and v < new[i]:
                        new[i] = v
            if new == cur:
                break
            cur = new
        else:
            raise EvaluationError(f"relaxation at n={n} did not converge within {size + 1} rounds")
        row: list[int | None] = []
        for i, v in enumerate(cur):
            if v == INF:
                if n >= out.queue[i].deficit:
                    raise EvaluationError(f"no applicable equation for pattern {i} at n={n}")
                row.append(None)
            else:
                row.append(int(v))
        table[n] = row
    return table


@dataclass
class FixpointRow:
    pattern_index: int
    n: int
    lhs: int
    rhs: int | None
    equation: str | None
    question: Question | None

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def __str__(self) -> str:
        q = format_question(self.question) if self.question else "-"
        status = "ok" if self.ok else "MISMATCH"
        return f"A_{self.pattern_index}({self.n}) = {self.lhs}  min RHS = {self.rhs}  via ({self.equation}) {q}  {status}"


@dataclass
class FixpointReport:
    rows: list[FixpointRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def failures(self) -> list[FixpointRow]:
        return [r for r in self.rows if not r.ok]


def verify_fixpoint(
    out: DerivationOutput, n_range: Sequence[int], solver: ConcreteSolver | None = None
) -> FixpointReport:
    """Check that oracle values satisfy ``A_i(n) = min_j RHS_j(n)`` exactly."""
    cache: dict[tuple[int, int], int | None] = {}

    def oracle(l: int, m: int) -> int | None:
        if (l, m) not in cache:
            cache[(l, m)] = oracle_value(out.queue[l], m, solver) if m >= 0 else None
        return cache[(l, m)]

    report = FixpointReport()
    for i in range(len(out.queue)):
        for n in n_range:
            lhs = oracle(i, n)
            if lhs is None:
                continue
            best = None
            best_eq = None
            for eq in out.equations_for(i):
                v = eq.rhs(oracle, n)
                if v is not None and (best is None or v < best):
                    best, best_eq = v, eq
            report.rows.append(
                FixpointRow(i, n, lhs, best, best_eq.id if best_eq else None, best_eq.question if best_eq else None)
            )
    return report


def full_game_value(game: Game, p: int, n: int, solver: ConcreteSolver | None = None, additional: bool = True) -> int:
    return solve_concrete(ConcreteMaset.full(game, p, n, additional), solver)
