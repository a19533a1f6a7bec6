"""JSON documents holding a full derivation.

One pattern or equation per line keeps the files readable and diffable;
the whole document is still plain JSON.
"""

from __future__ import annotations

import json
from typing import Any

from .equations import Child, DerivationOutput, Equation, Term
from .pattern import ADD, STAR, Game, MasetPattern
from .polynomial import Polynomial

SCHEMA_VERSION = 1


class DocumentError(ValueError):
    """Malformed derivation document; ``location`` says where."""

    def __init__(self, message: str, location: str):
        super().__init__(f"{location}: {message}")
        self.location = location


def _symbol(x: int) -> int | str:
    if x == STAR:
        return "*"
    if x == ADD:
        return "a"
    return x


def _pattern_json(pattern: MasetPattern) -> dict[str, Any]:
    return {
        "clauses": [[_symbol(x) for x in c] for c in pattern.clauses],
        "deficit": pattern.deficit,
    }


def _child_json(child: Child) -> dict[str, Any]:
    return {
        "answer": child.answer,
        "raw": _pattern_json(child.raw),
        "normalized": None if child.normalized is None else _pattern_json(child.normalized),
        "queue_index": child.queue_index,
        "shift": child.shift,
        "length": child.length,
    }


def _equation_json(eq: Equation) -> dict[str, Any]:
    return {
        "id": eq.id,
        "pattern": eq.pattern_index,
        "number": eq.number,
        "question": [_symbol(x) for x in eq.question],
        "terms": [[t.index, t.shift] for t in eq.terms],
        "w": list(eq.w.coeffs),
        "valid_from": eq.valid_from,
        "children": [_child_json(c) for c in eq.children],
    }


def emit_document(out: DerivationOutput) -> bytes:
    dumps = lambda obj: json.dumps(obj, separators=(", ", ": "), ensure_ascii=False)
    lines = [
        "{",
        f'  "schema_version": {SCHEMA_VERSION},',
        f'  "game": {dumps(out.game.value)},',
        f'  "pegs": {out.p},',
        '  "patterns": [',
    ]
    pats = [dumps({"index": i, **_pattern_json(p)}) for i, p in enumerate(out.queue)]
    lines.append(",\n".join("    " + s for s in pats))
    lines.append("  ],")
    lines.append('  "equations": [')
    eqs = [dumps(_equation_json(e)) for e in out.equations]
    lines.append(",\n".join("    " + s for s in eqs))
    lines.append("  ]")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


# -- parsing ---------------------------------------------------------------


def _get(obj: Any, key: str, kind: type | tuple[type, ...], where: str) -> Any:
    if not isinstance(obj, dict):
        raise DocumentError("expected an object", where)
    if key not in obj:
        raise DocumentError(f"missing field {key!r}", where)
    value = obj[key]
    if not isinstance(value, kind) or (isinstance(value, bool) and kind is not bool):
        raise DocumentError(f"field {key!r} has the wrong type", f"{where}.{key}")
    return value


def _parse_symbol(x: Any, where: str, allow: str) -> int:
    if isinstance(x, int) and not isinstance(x, bool) and x >= 0:
        return x
    if x == "*" and "*" in allow:
        return STAR
    if x == "a" and "a" in allow:
        return ADD
    raise DocumentError(f"bad symbol {x!r}", where)


def _parse_pattern(obj: Any, game: Game, p: int, where: str) -> MasetPattern:
    clauses = _get(obj, "clauses", list, where)
    deficit = _get(obj, "deficit", int, where)
    parsed = []
    for ci, clause in enumerate(clauses):
        cw = f"{where}.clauses[{ci}]"
        if not isinstance(clause, list):
            raise DocumentError("clause must be a list", cw)
        parsed.append(tuple(_parse_symbol(x, cw, "*") for x in clause))
    try:
        return MasetPattern(p, game, deficit, tuple(parsed))
    except ValueError as exc:
        raise DocumentError(str(exc), where) from None


def _optional(obj: dict, key: str, where: str) -> int | None:
    value = obj.get(key)
    if value is not None and (not isinstance(value, int) or isinstance(value, bool)):
        raise DocumentError(f"field {key!r} must be an integer or null", f"{where}.{key}")
    return value


def parse_document(data: bytes | str) -> DerivationOutput:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError("not UTF-8", f"byte {exc.start}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None

    version = _get(doc, "schema_version", int, "$")
    if version != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema version {version}", "$.schema_version")
    try:
        game = Game.parse(_get(doc, "game", str, "$"))
    except ValueError as exc:
        raise DocumentError(str(exc), "$.game") from None
    p = _get(doc, "pegs", int, "$")
    if p < 1:
        raise DocumentError("pegs must be positive", "$.pegs")

    queue = []
    for i, obj in enumerate(_get(doc, "patterns", list, "$")):
        where = f"$.patterns[{i}]"
        if _get(obj, "index", int, where) != i:
            raise DocumentError("pattern indices must be consecutive from 0", f"{where}.index")
        queue.append(_parse_pattern(obj, game, p, where))

    equations = []
    for e, obj in enumerate(_get(doc, "equations", list, "$")):
        where = f"$.equations[{e}]"
        pattern_index = _get(obj, "pattern", int, where)
        if not 0 <= pattern_index < len(queue):
            raise DocumentError("pattern index out of range", f"{where}.pattern")
        question = tuple(_parse_symbol(x, f"{where}.question", "a") for x in _get(obj, "question", list, where))
        if len(question) != p:
            raise DocumentError(f"question must have {p} pegs", f"{where}.question")
        terms = []
        for ti, t in enumerate(_get(obj, "terms", list, where)):
            tw = f"{where}.terms[{ti}]"
            if (
                not isinstance(t, list)
                or len(t) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in t)
            ):
                raise DocumentError("term must be [index, shift]", tw)
            if not 0 <= t[0] < len(queue) or t[1] < 0:
                raise DocumentError("term out of range", tw)
            terms.append(Term(t[0], t[1]))
        w = _get(obj, "w", list, where)
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in w):
            raise DocumentError("w must list integer coefficients", f"{where}.w")
        children = []
        for ci, c in enumerate(_get(obj, "children", list, where)):
            cw = f"{where}.children[{ci}]"
            norm = c.get("normalized") if isinstance(c, dict) else None
            children.append(
                Child(
                    _get(c, "answer", int, cw),
                    _parse_pattern(_get(c, "raw", dict, cw), game, p, f"{cw}.raw"),
                    None if norm is None else _parse_pattern(norm, game, p, f"{cw}.normalized"),
                    _optional(c, "queue_index", cw),
                    _optional(c, "shift", cw),
                    _optional(c, "length", cw),
                )
            )
        equations.append(
            Equation(
                _get(obj, "id", str, where),
                pattern_index,
                _get(obj, "number", int, where),
                question,
                tuple(terms),
                Polynomial(w),
                _get(obj, "valid_from", int, where),
                tuple(children),
            )
        )
    return DerivationOutput(game, p, queue, equations)
