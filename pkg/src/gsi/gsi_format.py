"""The GSI file format.

UTF-8, line-based, ``#`` starts a comment, fields whitespace-separated,
integers signed decimal::

    gsi 1
    r 2
    min 0 0
    conductor 5 5
    elem 0 0
    elem 5 5

Header lines come in that order; one ``elem`` line per small element (min and
conductor must appear among them, order irrelevant).  ``emit_gsi`` sorts
elements lexicographically, so parse-then-emit is byte-identical on
normalized files.
"""
from __future__ import annotations

from .constructors import from_small_elements
from .errors import ParseError, ValidationError
from .ideal import SmallRep
from .lattice import Point

MAGIC = "gsi"
VERSION = 1


def _significant_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((no, body.split()))
    return out


def _ints(fields: list[str], line: int) -> list[int]:
    vals = []
    for tok in fields:
        try:
            vals.append(int(tok))
        except ValueError:
            raise ParseError(f"expected integer, got {tok!r}", line) from None
    return vals


def _point(fields: list[str], r: int, line: int, what: str) -> Point:
    vals = _ints(fields, line)
    if len(vals) != r:
        raise ParseError(f"{what} needs {r} coordinates, got {len(vals)}", line)
    return tuple(vals)


def parse_gsi(text: str) -> SmallRep:
    """Parse and validate a GSI document.

    Syntax errors carry the offending line; axiom failures are raised as
    ValidationError with the failing axiom, and the report is annotated with
    the line of the first counterexample element when it appears in the file.
    """
    lines = _significant_lines(text)
    if not lines:
        raise ParseError("empty document")
    pos = 0

    def expect(keyword: str) -> tuple[int, list[str]]:
        nonlocal pos
        if pos >= len(lines):
            last = lines[-1][0] if lines else 1
            raise ParseError(f"missing {keyword!r} line", last)
        no, fields = lines[pos]
        if fields[0] != keyword:
            raise ParseError(f"expected {keyword!r} line, got {fields[0]!r}", no)
        pos += 1
        return no, fields[1:]

    no, rest = expect(MAGIC)
    if rest != [str(VERSION)]:
        raise ParseError(f"unsupported magic/version {rest}", no)
    no, rest = expect("r")
    vals = _ints(rest, no)
    if len(vals) != 1 or vals[0] < 1:
        raise ParseError("r needs a single positive integer", no)
    r = vals[0]
    no, rest = expect("min")
    m = _point(rest, r, no, "min")
    no, rest = expect("conductor")
    c = _point(rest, r, no, "conductor")

    elems: dict[Point, int] = {}
    while pos < len(lines):
        no, fields = lines[pos]
        if fields[0] != "elem":
            raise ParseError(f"expected 'elem' line, got {fields[0]!r}", no)
        p = _point(fields[1:], r, no, "elem")
        elems.setdefault(p, no)
        pos += 1
    if not elems:
        raise ParseError("no 'elem' lines", lines[-1][0])
    if m not in elems:
        raise ParseError("min is not listed among the elements", lines[-1][0])
    if c not in elems:
        raise ParseError("conductor is not listed among the elements", lines[-1][0])

    try:
        return from_small_elements(r, m, c, elems.keys())
    except ValidationError as err:
        for counter in err.report.counterexamples:
            for key in ("pair", "point"):
                val = counter.get(key)
                pts = val if key == "pair" else [val] if val else []
                for q in pts or []:
                    line = elems.get(tuple(q))
                    if line is not None:
                        counter.setdefault("line", line)
        raise


def emit_gsi(E: SmallRep) -> str:
    """Normalized text form: header plus lexicographically sorted elements."""
    out = [f"{MAGIC} {VERSION}", f"r {E.r}",
           "min " + " ".join(map(str, E.m)),
           "conductor " + " ".join(map(str, E.c))]
    for p in sorted(E.small):
        out.append("elem " + " ".join(map(str, p)))
    return "\n".join(out) + "\n"
