"""Passing between transcription categories and localisable semigroups.

``pseudoproduct_semigroup`` builds S(C) from a category and
``trace_category`` builds C(S) from a semigroup.  Both constructions keep the
carrier and the maps +, - unchanged, so the round trip can be compared
cell by cell.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Union

from .category import TranscriptionCategory, require_transcription, validate_transcription
from .core import (
    LOCALISABLE,
    AxiomReport,
    FiniteUnarySemigroup,
    check_axiom,
    first_failure,
    require_localisable,
)
from .errors import AlgebraError, TheoremViolation

Structure = Union[FiniteUnarySemigroup, TranscriptionCategory]


def pseudoproduct(C: TranscriptionCategory, x: int, y: int) -> int | None:
    """x (x) y = (x|y+) o (x-|y); ``None`` when the composite is undefined."""
    return C.compose(C.right(x, C.plus[y]), C.left(C.minus[x], y))


def pseudoproduct_table(C: TranscriptionCategory) -> list[list[int | None]]:
    return [[pseudoproduct(C, x, y) for y in C.elements] for x in C.elements]


def pseudoproduct_semigroup(C: TranscriptionCategory) -> FiniteUnarySemigroup:
    """S(C): the carrier of ``C`` under the pseudoproduct, with + and - inherited.

    The result is re-checked against the localisable axioms; any failure
    there is reported as :class:`TheoremViolation`.
    """
    require_transcription(C)
    table = pseudoproduct_table(C)
    for x, y in product(C.elements, repeat=2):
        if table[x][y] is None:
            raise TheoremViolation(f"pseudoproduct undefined at {(x, y)}")
    try:
        S = FiniteUnarySemigroup(table, C.plus, C.minus, None, C.names)
    except AlgebraError as exc:
        raise TheoremViolation(f"pseudoproduct is not a semigroup: {exc}") from exc
    bad = first_failure(S, LOCALISABLE)
    if bad is not None:
        raise TheoremViolation(f"S(C) is not localisable: {bad.describe(S.names)}")
    return S


def _trace_tables(mul, plus, minus):
    n = len(plus)
    comp = tuple(
        tuple(mul[x][y] if minus[x] == plus[y] else None for y in range(n)) for x in range(n)
    )
    objs = [e for e in range(n) if plus[e] == e]
    ltr = tuple(tuple(mul[e][x] for x in range(n)) for e in objs)
    rtr = tuple(tuple(mul[x][f] for x in range(n)) for f in objs)
    return comp, ltr, rtr


def trace_category(S: FiniteUnarySemigroup) -> TranscriptionCategory:
    """C(S): the trace product x o y = x y, defined exactly when x- = y+,
    with e|x = e x and x|f = x f."""
    require_localisable(S)
    comp, ltr, rtr = _trace_tables(S.mul, S.plus, S.minus)
    return TranscriptionCategory(S.plus, S.minus, comp, ltr, rtr, S.names)


@dataclass
class RoundtripReport:
    identical: bool
    diffs: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.identical


def _diff_tables(label, expected, got, names, out, row_names=None):
    def show(v):
        return "." if v is None else names[v]

    row_names = row_names or names
    for i, (ra, rb) in enumerate(zip(expected, got)):
        for j, (a, b) in enumerate(zip(ra, rb)):
            if a != b:
                out.append(f"{label}[{row_names[i]}][{names[j]}]: {show(a)} != {show(b)}")


def roundtrip_check(X: Structure) -> RoundtripReport:
    """Recompute S(C(S)) or C(S(C)) and compare every table literally.

    Axiom failures of the input are reported as diffs too, so an invalid
    input never compares identical.
    """
    diffs: list[str] = []
    names = X.names
    if isinstance(X, FiniteUnarySemigroup):
        plus, minus = X.require("plus"), X.require("minus")
        for a in LOCALISABLE:
            r = check_axiom(X, a)
            if not r.holds:
                diffs.append(f"input fails {r.describe(names)}")
        comp, ltr, rtr = _trace_tables(X.mul, plus, minus)
        C = _RawCategory(plus, minus, comp, ltr, rtr)
        mul2 = [[pseudoproduct(C, x, y) for y in X.elements] for x in X.elements]
        _diff_tables("mul", X.mul, mul2, names, diffs)
    else:
        for r in validate_transcription(X)[:-1]:
            if not r.holds:
                diffs.append(f"input fails {r.describe(names)}")
        mul = pseudoproduct_table(X)
        if any(v is None for row in mul for v in row):
            diffs.append("pseudoproduct undefined somewhere")
            mul = [[0 if v is None else v for v in row] for row in mul]
        comp, ltr, rtr = _trace_tables(mul, X.plus, X.minus)
        obj_names = [names[e] for e in X.objects]
        _diff_tables("comp", X.comp, comp, names, diffs)
        _diff_tables("ltr", X.ltr, ltr, names, diffs, obj_names)
        _diff_tables("rtr", X.rtr, rtr, names, diffs, obj_names)
    return RoundtripReport(not diffs, diffs)


class _RawCategory:
    """Tables of C(S) without validation, enough to evaluate the pseudoproduct."""

    def __init__(self, plus, minus, comp, ltr, rtr):
        self.plus, self.minus, self.comp, self.ltr, self.rtr = plus, minus, comp, ltr, rtr
        self._row = {e: i for i, e in enumerate(x for x in range(len(plus)) if plus[x] == x)}

    compose = TranscriptionCategory.compose
    left = TranscriptionCategory.left
    right = TranscriptionCategory.right

    def object_row(self, e):
        return self._row.get(e)


# -- morphisms -------------------------------------------------------------------

@dataclass(frozen=True)
class AlgebraMorphism:
    source: Structure
    target: Structure
    map: tuple[int, ...]

    def __post_init__(self):
        m = tuple(int(v) for v in self.map)
        if len(m) != self.source.order:
            raise ValueError("morphism map must be total on the source")
        if any(not 0 <= v < self.target.order for v in m):
            raise ValueError("morphism map leaves the target")
        object.__setattr__(self, "map", m)

    def __call__(self, x: int) -> int:
        return self.map[x]


def check_pm_morphism(phi: AlgebraMorphism) -> AxiomReport:
    """Semigroup morphism preserving + and -; witness (x, y) or (x,)."""
    S, T, f = phi.source, phi.target, phi.map
    for x, y in product(S.elements, repeat=2):
        if f[S.mul[x][y]] != T.mul[f[x]][f[y]]:
            return AxiomReport("pm-morphism:mul", False, (x, y))
    for key in ("plus", "minus"):
        a, b = S.require(key), T.require(key)
        for x in S.elements:
            if f[a[x]] != b[f[x]]:
                return AxiomReport(f"pm-morphism:{key}", False, (x,))
    return AxiomReport("pm-morphism", True)


def check_functor(psi: AlgebraMorphism) -> AxiomReport:
    """Functor of transcription categories preserving both transcription maps."""
    C, D, f = psi.source, psi.target, psi.map
    for key in ("plus", "minus"):
        a, b = getattr(C, key), getattr(D, key)
        for x in C.elements:
            if f[a[x]] != b[f[x]]:
                return AxiomReport(f"functor:{key}", False, (x,))
    for x, y in product(C.elements, repeat=2):
        xy = C.comp[x][y]
        if xy is not None and D.comp[f[x]][f[y]] != f[xy]:
            return AxiomReport("functor:comp", False, (x, y))
    for e, x in product(C.objects, C.elements):
        if f[C.left(e, x)] != D.left(f[e], f[x]):
            return AxiomReport("functor:ltr", False, (e, x))
        if f[C.right(x, e)] != D.right(f[x], f[e]):
            return AxiomReport("functor:rtr", False, (e, x))
    return AxiomReport("functor", True)
