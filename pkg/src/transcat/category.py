"""Finite small categories carrying left and right transcription maps.

Composition is a full n x n table holding ``None`` where ``x o y`` is
undefined; definedness is re-derived from ``plus``/``minus`` on
construction and any disagreement raises :class:`DomainMismatch`.

The transcription tables are stored on object rows only: ``ltr[i][x]`` is
``e|x`` and ``rtr[i][x]`` is ``x|e`` for the i-th object ``e`` (objects are
listed in element order).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Sequence

from .core import AxiomReport, FiniteUnarySemigroup, check_name
from .errors import AxiomViolation, DomainMismatch, IndexOutOfRange, TheoremViolation

Partial = tuple[tuple[int | None, ...], ...]


@dataclass(frozen=True)
class TranscriptionCategory:
    plus: tuple[int, ...]
    minus: tuple[int, ...]
    comp: Partial
    ltr: tuple[tuple[int, ...], ...]
    rtr: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        n = len(self.plus)
        if n == 0:
            raise ValueError("a category needs at least one arrow")
        plus = _vector(self.plus, n, "plus")
        minus = _vector(self.minus, n, "minus")
        comp = []
        if len(self.comp) != n:
            raise ValueError(f"comp has {len(self.comp)} rows, expected {n}")
        for x, row in enumerate(self.comp):
            if len(row) != n:
                raise ValueError(f"comp row {x} has {len(row)} entries, expected {n}")
            comp.append(tuple(None if v is None else _in_range(v, n, f"comp[{x}][{y}]")
                              for y, v in enumerate(row)))
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)
        object.__setattr__(self, "comp", tuple(comp))
        names = tuple(self.names) if self.names else tuple(str(i) for i in range(n))
        if len(names) != n or len(set(names)) != n:
            raise ValueError("need n distinct names")
        for name in names:
            check_name(name)
        object.__setattr__(self, "names", names)
        objs = tuple(e for e in range(n) if plus[e] == e)
        object.__setattr__(self, "_objects", objs)
        object.__setattr__(self, "_row", {e: i for i, e in enumerate(objs)})
        _check_category_axioms(self)
        k = len(self.objects)
        for key in ("ltr", "rtr"):
            rows = getattr(self, key)
            if len(rows) != k:
                raise ValueError(f"{key} has {len(rows)} rows, expected one per object ({k})")
            object.__setattr__(self, key, tuple(_vector(r, n, key) for r in rows))

    @property
    def order(self) -> int:
        return len(self.plus)

    @property
    def elements(self) -> range:
        return range(len(self.plus))

    @property
    def objects(self) -> tuple[int, ...]:
        return self._objects

    def object_row(self, e: int) -> int | None:
        return self._row.get(e)

    def compose(self, x, y):
        if x is None or y is None:
            return None
        return self.comp[x][y]

    def left(self, e, x):
        """e|x, or ``None`` if ``e`` is not an object."""
        if e is None or x is None:
            return None
        row = self.object_row(e)
        return None if row is None else self.ltr[row][x]

    def right(self, x, f):
        """x|f, or ``None`` if ``f`` is not an object."""
        if f is None or x is None:
            return None
        row = self.object_row(f)
        return None if row is None else self.rtr[row][x]

    def p(self, x):
        return None if x is None else self.plus[x]

    def m(self, x):
        return None if x is None else self.minus[x]


def _in_range(v, n, what):
    v = int(v)
    if not 0 <= v < n:
        raise IndexOutOfRange(f"{what} = {v} not in [0, {n})")
    return v


def _vector(arr, n, what):
    if len(arr) != n:
        raise ValueError(f"{what} has length {len(arr)}, expected {n}")
    return tuple(_in_range(v, n, what) for v in arr)


def _check_category_axioms(C: TranscriptionCategory) -> None:
    plus, minus, comp = C.plus, C.minus, C.comp
    n = len(plus)
    for x in range(n):
        if minus[plus[x]] != plus[x] or plus[minus[x]] != minus[x]:
            raise AxiomViolation("2.1b", (x,))
    for x, y in product(range(n), repeat=2):
        defined = comp[x][y] is not None
        if defined != (minus[x] == plus[y]):
            state = "defined" if defined else "undefined"
            raise DomainMismatch(x, y, f"composite {state} but x- {'!=' if defined else '=='} y+")
    for x in range(n):
        if comp[plus[x]][x] != x or comp[x][minus[x]] != x:
            raise AxiomViolation("2.1a", (x,))
    for x, y in product(range(n), repeat=2):
        xy = comp[x][y]
        if xy is not None and (plus[xy] != plus[x] or minus[xy] != minus[y]):
            raise AxiomViolation("2.1d", (x, y))
    for x, y, z in product(range(n), repeat=3):
        xy, yz = comp[x][y], comp[y][z]
        if xy is not None and yz is not None and comp[xy][z] != comp[x][yz]:
            raise AxiomViolation("2.1e", (x, y, z))


def validate_category(plus, minus, comp, ltr, rtr, names=None, transcription=True):
    """Build and check a category; with ``transcription`` also require (3.1a-f)."""
    C = TranscriptionCategory(
        tuple(plus), tuple(minus), tuple(tuple(r) for r in comp),
        tuple(tuple(r) for r in ltr), tuple(tuple(r) for r in rtr), tuple(names or ()),
    )
    if transcription:
        require_transcription(C)
    return C


# -- transcription axioms ---------------------------------------------------------

@dataclass(frozen=True)
class TranscriptionAxiom:
    id: str
    domains: str  # one letter per variable: 'o' ranges over objects, 'x' over arrows
    sides: Callable[..., list]
    text: str


TRANSCRIPTION_AXIOMS: dict[str, TranscriptionAxiom] = {}


def _taxiom(id, domains, text):
    def register(fn):
        TRANSCRIPTION_AXIOMS[id] = TranscriptionAxiom(id, domains, fn, text)
        return fn

    return register


@_taxiom("3.1a", "oo", "e|f (left) = e|f (right)")
def _(C, e, f):
    return [(C.left(e, f), C.right(e, f))]


@_taxiom("3.1b", "x", "x+|x = x = x|x-")
def _(C, x):
    return [(C.left(C.plus[x], x), x), (C.right(x, C.minus[x]), x)]


@_taxiom("3.1c", "oox", "e|(f|x) = (e|f)|x and x|(e|f) = (x|e)|f")
def _(C, e, f, x):
    return [
        (C.left(e, C.left(f, x)), C.left(C.left(e, f), x)),
        (C.right(x, C.right(e, f)), C.right(C.right(x, e), f)),
    ]


@_taxiom("3.1d", "oxx", "e|(x o y) = (e|x) o ((e|x)-|y) and dual")
def _(C, e, x, y):
    xy = C.comp[x][y]
    if xy is None:
        return []
    ex = C.left(e, x)
    ye = C.right(y, e)
    return [
        (C.left(e, xy), C.compose(ex, C.left(C.m(ex), y))),
        (C.right(xy, e), C.compose(C.right(x, C.p(ye)), ye)),
    ]


@_taxiom("3.1e", "ox", "(e|x)+ = e|x+ and (x|e)- = x-|e")
def _(C, e, x):
    return [
        (C.p(C.left(e, x)), C.left(e, C.plus[x])),
        (C.m(C.right(x, e)), C.right(C.minus[x], e)),
    ]


@_taxiom("3.1f", "oox", "(e|x)|f = e|(x|f)")
def _(C, e, f, x):
    return [(C.right(C.left(e, x), f), C.left(e, C.right(x, f)))]


@_taxiom("3.2", "ox", "(e|x)- = (e|x)-|x- (both sides) and dual")
def _(C, e, x):
    d = C.m(C.left(e, x))
    u = C.p(C.right(x, e))
    px, mx = C.plus[x], C.minus[x]
    return [
        (d, C.left(d, mx)),
        (d, C.right(d, mx)),
        (u, C.right(px, u)),
        (u, C.left(px, u)),
    ]


TRANSCRIPTION_IDS = ("3.1a", "3.1b", "3.1c", "3.1d", "3.1e", "3.1f")


def check_transcription_axiom(C: TranscriptionCategory, axiom_id: str) -> AxiomReport:
    ax = TRANSCRIPTION_AXIOMS[axiom_id]
    pools = [C.objects if d == "o" else C.elements for d in ax.domains]
    for xs in product(*pools):
        for lhs, rhs in ax.sides(C, *xs):
            if lhs is None or rhs is None or lhs != rhs:
                return AxiomReport(ax.id, False, xs)
    return AxiomReport(ax.id, True)


def validate_transcription(C: TranscriptionCategory) -> list[AxiomReport]:
    """One report per transcription axiom, plus the derived identity (3.2)."""
    return [check_transcription_axiom(C, a) for a in TRANSCRIPTION_IDS + ("3.2",)]


def require_transcription(C: TranscriptionCategory) -> None:
    for report in validate_transcription(C)[:-1]:
        if not report.holds:
            raise AxiomViolation(report.axiom, report.witness)


def object_band(C: TranscriptionCategory) -> FiniteUnarySemigroup:
    """The band of objects under (e, f) -> e|f, with e+ = e- = e."""
    objs = C.objects
    pos = {e: i for i, e in enumerate(objs)}
    mul = []
    for e in objs:
        row = []
        for f in objs:
            ef = C.right(e, f)
            if ef not in pos:
                raise AxiomViolation("3.1e", (e, f), "e|f is not an object")
            row.append(pos[ef])
        mul.append(row)
    ident = tuple(range(len(objs)))
    band = FiniteUnarySemigroup(mul, ident, ident, None, tuple(C.names[e] for e in objs))
    if any(band.mul[i][i] != i for i in ident):
        raise AxiomViolation("3.1b", None, "object band is not idempotent")
    return band


@dataclass(frozen=True)
class GroupoidReport:
    inverse: tuple[int, ...] | None
    witness: int | None = None

    @property
    def holds(self) -> bool:
        return self.inverse is not None

    def __bool__(self) -> bool:
        return self.holds


def is_groupoid(C: TranscriptionCategory) -> GroupoidReport:
    """Return the inverse map if every arrow is invertible, else a witness arrow."""
    inverse = []
    for x in C.elements:
        found = [
            y for y in C.elements
            if C.comp[x][y] == C.plus[x] and C.comp[y][x] == C.minus[x]
        ]
        if len(found) > 1:
            raise TheoremViolation(f"arrow {C.names[x]} has several inverses {found}")
        if not found:
            return GroupoidReport(None, x)
        inverse.append(found[0])
    return GroupoidReport(tuple(inverse))


def category_from_functions(n, plus, minus, compose, left, right, names: Sequence[str] = ()):
    """Tabulate a category from callables; ``compose`` is only called where defined."""
    comp = [[compose(x, y) if minus[x] == plus[y] else None for y in range(n)] for x in range(n)]
    objs = [e for e in range(n) if plus[e] == e]
    ltr = [[left(e, x) for x in range(n)] for e in objs]
    rtr = [[right(x, f) for x in range(n)] for f in objs]
    return TranscriptionCategory(
        tuple(plus), tuple(minus), tuple(map(tuple, comp)),
        tuple(map(tuple, ltr)), tuple(map(tuple, rtr)), tuple(names),
    )
