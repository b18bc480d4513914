"""DFA text format, canonical serialization and Graphviz export."""

import re
from collections.abc import Iterator

from syncgames.automaton.types import Dfa, check_alphabet
from syncgames.config.schema import CapsConfig
from syncgames.errors import CapExceededError, ParseError

_TOKEN = re.compile(r"\S+")


def _logical_lines(text: str) -> Iterator[tuple[int, list[tuple[int, str]]]]:
    """Yield (line number, [(column, token)]) for each non-blank line, comments stripped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(body)]
        if tokens:
            yield lineno, tokens


def _int(token: tuple[int, str], lineno: int, what: str) -> int:
    col, text = token
    if not text.isdigit():
        raise ParseError(f"expected {what}, got {text!r}", lineno, col)
    return int(text)


def parse_dfa(text: str, caps: CapsConfig | None = None) -> Dfa:
    """
    Parse the line-oriented DFA format::

        dfa
        states <n>
        letters <name>+
        trans
        <row for state 0>
        ...
        end
    """
    caps = caps or CapsConfig()
    lines = list(_logical_lines(text))
    cursor = 0

    def next_line(expect: str) -> tuple[int, list[tuple[int, str]]]:
        nonlocal cursor
        if cursor >= len(lines):
            last = lines[-1][0] if lines else 1
            raise ParseError(f"unexpected end of input, expected {expect}", last, 1)
        item = lines[cursor]
        cursor += 1
        return item

    def keyword(word: str, arity: int | None) -> tuple[int, list[tuple[int, str]]]:
        lineno, tokens = next_line(f"'{word}'")
        col, head = tokens[0]
        if head != word:
            raise ParseError(f"expected '{word}', got {head!r}", lineno, col)
        if arity is not None and len(tokens) - 1 != arity:
            raise ParseError(f"'{word}' takes {arity} argument(s)", lineno, col)
        return lineno, tokens[1:]

    keyword("dfa", 0)
    lineno, args = keyword("states", 1)
    n = _int(args[0], lineno, "a state count")
    if n < 1:
        raise ParseError("state count must be positive", lineno, args[0][0])
    if n > caps.max_states:
        raise CapExceededError("state count", n, caps.max_states)

    lineno, args = keyword("letters", None)
    if not args:
        raise ParseError("at least one letter is required", lineno, 1)
    names: list[str] = []
    for col, name in args:
        if name in names:
            raise ParseError(f"duplicate letter name {name!r}", lineno, col)
        names.append(name)
    try:
        check_alphabet(names)
    except ValueError as e:
        raise ParseError(str(e), lineno, args[0][0]) from None

    keyword("trans", 0)
    rows: list[tuple[int, ...]] = []
    for q in range(n):
        lineno, tokens = next_line(f"row for state {q}")
        if tokens[0][1] == "end":
            raise ParseError(f"missing rows: got {q} of {n}", lineno, tokens[0][0])
        if len(tokens) != len(names):
            raise ParseError(
                f"row for state {q} has {len(tokens)} entries, expected {len(names)}",
                lineno, tokens[0][0],
            )
        row = []
        for token in tokens:
            t = _int(token, lineno, "a state index")
            if t >= n:
                raise ParseError(f"row for state {q}: target {t} is out of range 0..{n - 1}", lineno, token[0])
            row.append(t)
        rows.append(tuple(row))

    keyword("end", 0)
    if cursor < len(lines):
        lineno, tokens = lines[cursor]
        raise ParseError("trailing content after 'end'", lineno, tokens[0][0])
    return Dfa(n, tuple(names), tuple(rows))


def serialize_dfa(dfa: Dfa) -> str:
    """Canonical form: single spaces, one row per line, no comments, trailing newline."""
    out = ["dfa", f"states {dfa.n}", "letters " + " ".join(dfa.letters), "trans"]
    out.extend(" ".join(str(t) for t in row) for row in dfa.delta)
    out.append("end")
    return "\n".join(out) + "\n"


def _gvquote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r"\""))


def _dot_lines(dfa: Dfa, name: str) -> Iterator[str]:
    yield f"digraph {_gvquote(name)} {{\n"
    yield "  rankdir=LR;\n"
    for q in range(dfa.n):
        yield f'  {q} [shape="circle"];\n'
    for q, row in enumerate(dfa.delta):
        bundles: dict[int, list[str]] = {}
        for a, t in enumerate(row):
            bundles.setdefault(t, []).append(dfa.letters[a])
        for t, labels in bundles.items():
            yield f"  {q} -> {t} [label={_gvquote(','.join(labels))}];\n"
    yield "}\n"


def export_dot(dfa: Dfa, name: str = "dfa") -> str:
    """Graphviz digraph with parallel edges merged under comma-joined labels."""
    return "".join(_dot_lines(dfa, name))
