"""The family description language.

One statement per line, '#' starts a comment:

    infgon/1
    arc M N
    orbit M N dl DL dr DR [count K]
    remove M N

The version header is written by the serializer and optional on input.
Parsing validates the family and reports failures with line provenance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .arcs import (
    Arc,
    ArcFamily,
    InvalidArc,
    Orbit,
    SelfCrossing,
    validate_family,
)

__all__ = [
    "HEADER",
    "ParseError",
    "Statement",
    "FamilyDocument",
    "parse_document",
    "parse_family",
    "serialize_family",
]

HEADER = "infgon/1"


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


@dataclass(frozen=True)
class Statement:
    kind: str  # "arc" | "orbit" | "remove"
    arc: Arc
    dl: int = 0
    dr: int = 0
    count: Optional[int] = 1
    line: int = 0

    def render(self) -> str:
        m, n = self.arc.left, self.arc.right
        if self.kind == "arc":
            return f"arc {m} {n}"
        if self.kind == "remove":
            return f"remove {m} {n}"
        tail = "" if self.count is None else f" count {self.count}"
        return f"orbit {m} {n} dl {self.dl} dr {self.dr}{tail}"


@dataclass(frozen=True)
class FamilyDocument:
    """Parsed document: header plus statements in declaration order."""

    header: str
    statements: tuple[Statement, ...]

    def render(self) -> str:
        lines = [self.header]
        lines.extend(s.render() for s in self.statements)
        return "\n".join(lines) + "\n"

    def family(self) -> ArcFamily:
        orbits = []
        removed = []
        for s in self.statements:
            if s.kind == "remove":
                removed.append(s.arc)
            else:
                orbits.append(Orbit(s.arc, s.dl, s.dr, s.count))
        return ArcFamily(tuple(orbits), frozenset(removed))


def _int(tok: str, line: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(line, f"expected an integer, got {tok!r}") from None


def _parse_statement(tokens: list[str], line: int) -> Statement:
    head = tokens[0]
    if head in ("arc", "remove"):
        if len(tokens) != 3:
            raise ParseError(line, f"usage: {head} M N")
        m, n = _int(tokens[1], line), _int(tokens[2], line)
        try:
            a = Arc(m, n)
        except ValueError as e:
            raise ParseError(line, str(e)) from None
        return Statement(head, a, line=line)
    if head == "orbit":
        if len(tokens) not in (7, 9) or tokens[3] != "dl" or tokens[5] != "dr":
            raise ParseError(line, "usage: orbit M N dl DL dr DR [count K]")
        m, n = _int(tokens[1], line), _int(tokens[2], line)
        dl, dr = _int(tokens[4], line), _int(tokens[6], line)
        count: Optional[int] = None
        if len(tokens) == 9:
            if tokens[7] != "count":
                raise ParseError(line, "usage: orbit M N dl DL dr DR [count K]")
            count = _int(tokens[8], line)
        try:
            a = Arc(m, n)
            Orbit(a, dl, dr, count)
        except ValueError as e:
            raise ParseError(line, str(e)) from None
        return Statement("orbit", a, dl, dr, count, line=line)
    raise ParseError(line, f"unknown statement {head!r}")


def parse_document(text: str) -> FamilyDocument:
    statements: list[Statement] = []
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if not header_seen and not statements and body.startswith("infgon/"):
            if body != HEADER:
                raise ParseError(lineno, f"unsupported format version {body!r}")
            header_seen = True
            continue
        statements.append(_parse_statement(body.split(), lineno))
    return FamilyDocument(HEADER, tuple(statements))


def _orbit_line(doc: FamilyDocument, orbit_index: int) -> int:
    declared = [s for s in doc.statements if s.kind != "remove"]
    return declared[orbit_index].line


def _generator_line(doc: FamilyDocument, family: ArcFamily, a: Arc) -> int:
    declared = [s for s in doc.statements if s.kind != "remove"]
    for s, o in zip(declared, family.orbits):
        if o.solve(a) is not None:
            return s.line
    return 0


def parse_family(text: str) -> ArcFamily:
    """Parse and validate; failures carry the offending line."""
    doc = parse_document(text)
    try:
        family = doc.family()
    except ValueError as e:
        msg = str(e)
        for s in doc.statements:
            if s.kind == "remove" and str(s.arc) in msg:
                raise ParseError(s.line, msg) from None
        raise ParseError(0, msg) from None
    verdict = validate_family(family)
    if isinstance(verdict, InvalidArc):
        raise ParseError(
            _orbit_line(doc, verdict.orbit_index),
            f"orbit generates an invalid pair at k={verdict.k}",
        )
    if isinstance(verdict, SelfCrossing):
        raise ParseError(
            _generator_line(doc, family, verdict.first),
            f"family crosses itself: {verdict.first} x {verdict.second}",
        )
    return family


def serialize_family(family: ArcFamily) -> str:
    """Canonical text: header, orbits sorted by (base, dl, dr, count) with
    singles written as arc statements, then sorted removals."""
    lines = [HEADER]

    def key(o: Orbit):
        return (
            o.base.left,
            o.base.right,
            o.dl,
            o.dr,
            o.count is None,
            o.count or 0,
        )

    for o in sorted(family.orbits, key=key):
        m, n = o.base.left, o.base.right
        if o.count == 1:
            lines.append(f"arc {m} {n}")
        elif o.count is None:
            lines.append(f"orbit {m} {n} dl {o.dl} dr {o.dr}")
        else:
            lines.append(f"orbit {m} {n} dl {o.dl} dr {o.dr} count {o.count}")
    for a in sorted(family.removed):
        lines.append(f"remove {a.left} {a.right}")
    return "\n".join(lines) + "\n"
