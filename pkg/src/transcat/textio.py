"""Line-oriented text formats for unary semigroups (``uas``) and transcription
categories (``ucat``), plus a JSON view of both.

A ``uas`` document::

    uas 1
    order 2
    names e f
    mul
    e f
    e f
    plus e f      # optional, as are minus and star

A ``ucat`` document lists plus, minus, the composition table with ``.`` for
undefined entries, then one ``ltr`` and one ``rtr`` row per object, objects
taken in element order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .category import TranscriptionCategory
from .core import UNARY, FiniteUnarySemigroup
from .errors import ParseError, VersionUnsupported

VERSION = 1
KINDS = ("uas", "ucat")

Payload = Union[FiniteUnarySemigroup, TranscriptionCategory]


@dataclass(frozen=True)
class UasDocument:
    kind: str
    payload: Payload
    version: int = VERSION


class _Lines:
    """Significant lines with their 1-based numbers, comments stripped."""

    def __init__(self, text: str):
        self.items = []
        for no, raw in enumerate(text.splitlines(), 1):
            tokens = raw.split("#", 1)[0].split()
            if tokens:
                self.items.append((no, tokens))
        self.pos = 0

    def peek(self):
        return self.items[self.pos] if self.pos < len(self.items) else None

    def take(self, what: str):
        item = self.peek()
        if item is None:
            last = self.items[-1][0] if self.items else 1
            raise ParseError(last, f"unexpected end of document, expected {what}")
        self.pos += 1
        return item


def _int(no, token, what):
    try:
        return int(token)
    except ValueError:
        raise ParseError(no, f"{what} must be an integer, got {token!r}") from None


def _header(lines: _Lines) -> str:
    no, tokens = lines.take("header")
    if len(tokens) != 2 or tokens[0] not in KINDS:
        raise ParseError(no, "expected 'uas <version>' or 'ucat <version>'")
    version = _int(no, tokens[1], "version")
    if version != VERSION:
        raise VersionUnsupported(no, f"{tokens[0]} version {version} is not supported")
    return tokens[0]


def _order(lines: _Lines) -> int:
    no, tokens = lines.take("order")
    if tokens[0] != "order" or len(tokens) != 2:
        raise ParseError(no, "expected 'order <n>'")
    n = _int(no, tokens[1], "order")
    if n < 1:
        raise ParseError(no, "order must be positive")
    return n


def _names(lines: _Lines, n: int) -> tuple[str, ...]:
    item = lines.peek()
    if item is None or item[1][0] != "names":
        return tuple(str(i) for i in range(n))
    no, tokens = lines.take("names")
    names = tokens[1:]
    if len(names) != n:
        raise ParseError(no, f"expected {n} names, got {len(names)}")
    seen = set()
    for name in names:
        if name in seen:
            raise ParseError(no, f"name {name!r} used twice")
        if name == ".":
            raise ParseError(no, "'.' is reserved for undefined entries")
        seen.add(name)
    return tuple(names)


def _lookup(no, token, index, what):
    try:
        return index[token]
    except KeyError:
        raise ParseError(no, f"unknown element {token!r} in {what}") from None


def _row(lines, keyword, n, index, allow_undefined=False, inline=True):
    """Read ``keyword t1 .. tn`` (inline) or a bare row of n tokens."""
    no, tokens = lines.take(keyword)
    if inline:
        if tokens[0] != keyword:
            raise ParseError(no, f"expected '{keyword}'")
        tokens = tokens[1:]
    if len(tokens) != n:
        raise ParseError(no, f"{keyword} row needs {n} entries, got {len(tokens)}")
    out = []
    for t in tokens:
        if allow_undefined and t == ".":
            out.append(None)
        else:
            out.append(_lookup(no, t, index, keyword))
    return no, tuple(out)


def _block(lines, keyword, rows, n, index, allow_undefined=False):
    no, tokens = lines.take(keyword)
    if tokens != [keyword]:
        raise ParseError(no, f"expected '{keyword}' on a line of its own")
    return [_row(lines, keyword, n, index, allow_undefined, inline=False) for _ in range(rows)]


def _parse_uas(lines: _Lines) -> FiniteUnarySemigroup:
    n = _order(lines)
    names = _names(lines, n)
    index = {name: i for i, name in enumerate(names)}
    rows = _block(lines, "mul", n, n, index)
    mul = [r for _, r in rows]
    maps = {}
    while lines.peek() is not None:
        no, tokens = lines.peek()
        key = tokens[0]
        if key not in UNARY:
            raise ParseError(no, f"unexpected {key!r}; expected one of plus, minus, star")
        if key in maps:
            raise ParseError(no, f"{key} given twice")
        _, maps[key] = _row(lines, key, n, index)
    return FiniteUnarySemigroup(mul, names=names, **maps)


def _parse_ucat(lines: _Lines) -> TranscriptionCategory:
    n = _order(lines)
    names = _names(lines, n)
    index = {name: i for i, name in enumerate(names)}
    _, plus = _row(lines, "plus", n, index)
    _, minus = _row(lines, "minus", n, index)
    comp = _block(lines, "comp", n, n, index, allow_undefined=True)
    for x, (no, row) in enumerate(comp):
        for y, v in enumerate(row):
            defined = minus[x] == plus[y]
            if defined and v is None:
                raise ParseError(no, f"{names[x]} o {names[y]} must be defined")
            if not defined and v is not None:
                raise ParseError(no, f"{names[x]} o {names[y]} must be '.'")
    k = sum(1 for e in range(n) if plus[e] == e)
    ltr = _block(lines, "ltr", k, n, index)
    rtr = _block(lines, "rtr", k, n, index)
    if lines.peek() is not None:
        no, tokens = lines.peek()
        raise ParseError(no, f"unexpected {tokens[0]!r} after rtr")
    return TranscriptionCategory(
        plus, minus, tuple(r for _, r in comp),
        tuple(r for _, r in ltr), tuple(r for _, r in rtr), names,
    )


def parse(text: str) -> UasDocument:
    lines = _Lines(text)
    kind = _header(lines)
    if kind == "uas":
        payload = _parse_uas(lines)
    else:
        payload = _parse_ucat(lines)
    return UasDocument(kind, payload)


def parse_file(path: str | Path) -> UasDocument:
    return parse(Path(path).read_text())


def _tokens(names, values):
    return " ".join("." if v is None else names[v] for v in values)


def render_semigroup(S: FiniteUnarySemigroup) -> str:
    nm = S.names
    out = ["uas 1", f"order {S.order}", "names " + " ".join(nm), "mul"]
    out += [_tokens(nm, row) for row in S.mul]
    for key in UNARY:
        arr = getattr(S, key)
        if arr is not None:
            out.append(f"{key} " + _tokens(nm, arr))
    return "\n".join(out) + "\n"


def render_category(C: TranscriptionCategory) -> str:
    nm = C.names
    out = ["ucat 1", f"order {C.order}", "names " + " ".join(nm)]
    out.append("plus " + _tokens(nm, C.plus))
    out.append("minus " + _tokens(nm, C.minus))
    out.append("comp")
    out += [_tokens(nm, row) for row in C.comp]
    out.append("ltr")
    out += [_tokens(nm, row) for row in C.ltr]
    out.append("rtr")
    out += [_tokens(nm, row) for row in C.rtr]
    return "\n".join(out) + "\n"


def render(doc: UasDocument | Payload) -> str:
    X = doc.payload if isinstance(doc, UasDocument) else doc
    if isinstance(X, FiniteUnarySemigroup):
        return render_semigroup(X)
    return render_category(X)


def to_json_obj(X: Payload) -> dict:
    nm = X.names

    def named(values):
        return [None if v is None else nm[v] for v in values]

    if isinstance(X, FiniteUnarySemigroup):
        obj = {"kind": "uas", "version": VERSION, "order": X.order, "names": list(nm),
               "mul": [named(r) for r in X.mul]}
        for key in UNARY:
            arr = getattr(X, key)
            if arr is not None:
                obj[key] = named(arr)
        return obj
    return {
        "kind": "ucat", "version": VERSION, "order": X.order, "names": list(nm),
        "plus": named(X.plus), "minus": named(X.minus),
        "comp": [named(r) for r in X.comp],
        "ltr": [named(r) for r in X.ltr], "rtr": [named(r) for r in X.rtr],
    }


def to_json(X: Payload) -> str:
    return json.dumps(to_json_obj(X), indent=2)
