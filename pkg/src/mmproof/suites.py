"""End-to-end verification suites behind ``mmproof verify``."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import known_values
from .canon import canonical_pattern
from .equations import DerivationOutput, derive, count_derivation, eval_system, oracle_value, verify_fixpoint
from .pattern import ADD, STAR, Game, MasetPattern, format_question
from .solver import ConcreteSolver, closed_form_ab, closed_form_mm


@dataclass
class SuiteResult:
    name: str
    lines: list[str] = field(default_factory=list)
    failures: int = 0

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def check(self, cond: bool, message: str) -> bool:
        self.lines.append(("ok    " if cond else "FAIL  ") + message)
        if not cond:
            self.failures += 1
        return cond


def parse_pattern_rows(game: Game, rows: list[str]) -> MasetPattern:
    """``["0*", "*0"]`` to a tight pattern (one character per peg)."""
    clauses = tuple(tuple(STAR if ch == "*" else int(ch) for ch in row) for row in rows)
    u = len({x for c in clauses for x in c if x != STAR})
    return MasetPattern(len(rows[0]), game, u, clauses)


def parse_question(text: str) -> tuple[int, ...]:
    return tuple(ADD if x == "a" else int(x) for x in text.split(","))


def _queue_mapping(result: SuiteResult, out: DerivationOutput) -> list[int] | None:
    """Our queue index for each reference pattern, or None if any is missing."""
    ours = {canonical_pattern(pat): i for i, pat in enumerate(out.queue)}
    mapping = []
    for k, rows in enumerate(known_values.QUEUE[(out.game.value, out.p)]):
        ref = parse_pattern_rows(out.game, rows)
        i = ours.get(canonical_pattern(ref))
        result.check(i is not None, f"M_{{{out.p},{k}}} = {ref} found in queue (index {i})")
        mapping.append(i)
    if None in mapping or len(set(mapping)) != len(mapping):
        return None
    return mapping


def _equations_match(result: SuiteResult, out: DerivationOutput, mapping: list[int]) -> None:
    ref_eqs = known_values.equations_for(out.game.value, out.p)

    def sig(pattern: int, terms, w) -> tuple:
        return pattern, tuple(sorted(terms)), tuple(w)

    ours = Counter(sig(e.pattern_index, ((t.index, t.shift) for t in e.terms), e.w.coeffs) for e in out.equations)
    theirs = Counter()
    for eq_id, _, terms, w in ref_eqs:
        i = int(eq_id.split(".")[2])
        theirs[sig(mapping[i], ((mapping[l], r) for l, r in terms), w)] += 1
    result.check(
        ours == theirs,
        f"equation multiset (pattern, terms, W) matches the {len(ref_eqs)} reference equations",
    )

    # every reference equation appears with the same question
    by_question = {(e.pattern_index, e.question): e for e in out.equations}
    missing = []
    for eq_id, q, terms, w in ref_eqs:
        i = int(eq_id.split(".")[2])
        eq = by_question.get((mapping[i], parse_question(q)))
        if eq is None or sig(eq.pattern_index, ((t.index, t.shift) for t in eq.terms), eq.w.coeffs) != sig(
            mapping[i], ((mapping[l], r) for l, r in terms), w
        ):
            missing.append(eq_id)
    result.check(not missing, "every reference equation has the same question, terms and W" + (f" (bad: {', '.join(missing)})" if missing else ""))


def _oracle_table(result: SuiteResult, out: DerivationOutput, mapping: list[int], solver: ConcreteSolver) -> None:
    for n, row in known_values.VALUES[out.game.value].items():
        got = []
        for k, expected in enumerate(row):
            if expected is None:
                got.append(None)
                continue
            got.append(oracle_value(out.queue[mapping[k]], n, solver))
        result.check(got == row, f"oracle n={n}: {_fmt_row(got)}")


def _fmt_row(row: list[int | None]) -> str:
    return ", ".join("-" if v is None else str(v) for v in row)


def suite_p1() -> SuiteResult:
    result = SuiteResult("p1")
    out = derive(Game.MM, 1)
    result.check(len(out.queue) == 1 and len(out.equations) == 1, f"{len(out.queue)} patterns, {len(out.equations)} equations")
    eq = out.equations[0]
    result.check(
        [(t.index, t.shift) for t in eq.terms] == [(0, 1)] and eq.w.coeffs == (0, 1),
        f"equation: A_{{1,0}}(n) = A_{{1,0}}(n-1) + {eq.w}",
    )
    table = eval_system(out, 50)
    bad = [n for n in range(1, 51) if table[n][0] != n * (n + 1) // 2]
    result.check(not bad, f"A(n) = n(n+1)/2 for 1 <= n <= 50 (A(50) = {table[50][0]})")
    return result


def _two_peg(game: Game, name: str) -> SuiteResult:
    result = SuiteResult(name)
    out = derive(game, 2)
    n_pat, n_eq = (6, 47) if game is Game.MM else (3, 17)
    result.check(len(out.queue) == n_pat and len(out.equations) == n_eq, f"{len(out.queue)} patterns, {len(out.equations)} equations")
    keys = {canonical_pattern(p) for p in out.queue}
    result.check(len(keys) == len(out.queue), "queue patterns pairwise non-isomorphic")
    mapping = _queue_mapping(result, out)
    if mapping is None:
        return result
    _equations_match(result, out, mapping)
    _oracle_table(result, out, mapping, ConcreteSolver())
    return result


def suite_mm2() -> SuiteResult:
    return _two_peg(Game.MM, "mm2")


def suite_ab2() -> SuiteResult:
    return _two_peg(Game.AB, "ab2")


def suite_formulas(n_max: int = 100) -> SuiteResult:
    result = SuiteResult("formulas")
    for game, lo, scale, formula in (
        (Game.MM, 3, lambda n: n * n, closed_form_mm),
        (Game.AB, 2, lambda n: n * (n - 1), closed_form_ab),
    ):
        table = eval_system(derive(game, 2), n_max)
        bad = [n for n in range(lo, n_max + 1) if Fraction(table[n][0]) != scale(n) * formula(n)]
        result.check(
            not bad,
            f"{game.value}: A_{{2,0}}(n) matches the closed form for {lo} <= n <= {n_max}"
            + (f" (bad n: {bad[:5]})" if bad else f"; A_{{2,0}}({n_max}) = {table[n_max][0]}"),
        )
    return result


def suite_fixpoint(n_range: range = range(3, 8)) -> SuiteResult:
    result = SuiteResult("fixpoint")
    for game in (Game.MM, Game.AB):
        out = derive(game, 2)
        report = verify_fixpoint(out, n_range, ConcreteSolver())
        for row in report.rows:
            result.check(row.ok, f"{game.value} {row}")
        degenerate = {
            e.id for e in out.equations if any(t.index == e.pattern_index and t.shift == 0 for t in e.terms)
        }
        chosen = {row.equation for row in report.rows}
        result.check(
            not degenerate & chosen,
            f"{game.value}: none of the {len(degenerate)} self-referencing equations is ever the minimum",
        )
        argmin = {row.question for row in report.rows if row.pattern_index == 0}
        result.check(argmin == {(0, 1)}, f"{game.value}: optimal first question {', '.join(sorted(format_question(q) for q in argmin if q))}")
    return result


def suite_counts3() -> SuiteResult:
    result = SuiteResult("counts3")
    for game in (Game.MM, Game.AB):
        start = time.monotonic()
        got = count_derivation(game, 3)
        expected = known_values.COUNTS3[game.value]
        result.check(
            got == expected,
            f"{game.value} p=3: {got[0]} patterns, {got[1]} equations ({time.monotonic() - start:.0f} s)",
        )
    return result


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "p1": suite_p1,
    "mm2": suite_mm2,
    "ab2": suite_ab2,
    "formulas": suite_formulas,
    "fixpoint": suite_fixpoint,
    "counts3": suite_counts3,
}
SLOW_SUITES = {"counts3"}
