"""LaTeX listings of a derivation: patterns, questions, answers, equations."""

from __future__ import annotations

from .answers import index_to_answer
from .equations import DerivationOutput, Equation, Term
from .pattern import format_pattern, format_question

PREAMBLE = (
    "% needs amssymb; \\ans{b}{w} typesets an answer\n"
    "\\providecommand{\\ans}[2]{[#1,#2]}\n"
)


def format_term(p: int, term: Term) -> str:
    arg = "n" if term.shift == 0 else f"n-{term.shift}"
    return f"A_{{{p},{term.index}}}({arg})"


def format_equation(out: DerivationOutput, eq: Equation) -> str:
    parts = [format_term(out.p, t) for t in eq.terms]
    if not eq.w.is_zero() or not parts:
        parts.append(str(eq.w))
    return f"A_{{{out.p},{eq.pattern_index}}}(n) = {' + '.join(parts)}"


def answer_line(out: DerivationOutput, eq: Equation, k: int) -> str:
    child = eq.children[k]
    b, w = index_to_answer(child.answer, out.p)
    text = f"\\ans{{{b}}}{{{w}}} \\rightarrow {format_pattern(child.raw, latex=True)}"
    if child.normalized is not None:
        if child.normalized.clauses != child.raw.clauses:
            text += f" \\Rightarrow {format_pattern(child.normalized, latex=True)}"
        rep = out.queue[child.queue_index]
        if rep.clauses != child.normalized.clauses:
            # the queue entry is shown with the child's star index
            text += f" \\Rrightarrow {format_pattern(rep, child.raw.deficit, latex=True)}"
    return f"${text}$"


def emit_listing(out: DerivationOutput) -> str:
    lines = [PREAMBLE + "\\begin{itemize}"]
    for i, pattern in enumerate(out.queue):
        lines.append(f"  \\item[] $M_{{{out.p},{i}}} = {format_pattern(pattern, latex=True)}$")
        lines.append("    \\begin{itemize}")
        for eq in out.equations_for(i):
            lines.append(f"      \\item[] ${format_question(eq.question, latex=True)}$")
            lines.append("        \\begin{itemize}")
            for k in range(len(eq.children)):
                lines.append(f"          \\item[] {answer_line(out, eq, k)}")
            lines.append(
                f"            \\begin{{equation}} {format_equation(out, eq)} \\tag{{{eq.id}}} \\end{{equation}}"
            )
            # a safe lower bound from the split, not a proven threshold
            lines.append(f"            % valid for n >= {eq.valid_from} (conservative bound)")
            lines.append("        \\end{itemize}")
        lines.append("    \\end{itemize}")
    lines.append("\\end{itemize}")
    return "\n".join(lines) + "\n"
