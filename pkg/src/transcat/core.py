"""Finite unary semigroups stored as validated Cayley tables.

Elements are the dense indices ``0..n-1``; ``names`` is only a parallel
label table used for input and output.  The optional unary maps are
``plus`` (x -> x+), ``minus`` (x -> x-) and ``star`` (x -> x*).

Every identity the package knows about is registered in :data:`AXIOMS`
and checked exhaustively by :func:`check_axiom`, which reports the
lexicographically least failing tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import product
from typing import Callable, Iterable, Sequence

from .errors import (
    IndexOutOfRange,
    MissingUnary,
    NonAssociative,
    NotAProjection,
    NotLocalisable,
    TheoremViolation,
    UnknownAxiomId,
)

UNARY = ("plus", "minus", "star")

Table = tuple[tuple[int, ...], ...]


def _default_names(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def check_name(name: str) -> None:
    if not name or any(c.isspace() for c in name) or name == "." or "#" in name:
        raise ValueError(f"invalid element name {name!r}")


@dataclass(frozen=True)
class FiniteUnarySemigroup:
    """A semigroup given by its table, with optional unary maps.

    Construction validates shape, index ranges and associativity, so any
    instance in hand is a genuine semigroup.
    """

    mul: Table
    plus: tuple[int, ...] | None = None
    minus: tuple[int, ...] | None = None
    star: tuple[int, ...] | None = None
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        mul = tuple(tuple(int(v) for v in row) for row in self.mul)
        n = len(mul)
        if n == 0:
            raise ValueError("a semigroup needs at least one element")
        for x, row in enumerate(mul):
            if len(row) != n:
                raise ValueError(f"row {x} has {len(row)} entries, expected {n}")
            for y, v in enumerate(row):
                if not 0 <= v < n:
                    raise IndexOutOfRange(f"mul[{x}][{y}] = {v} not in [0, {n})")
        object.__setattr__(self, "mul", mul)
        for key in UNARY:
            arr = getattr(self, key)
            if arr is None:
                continue
            arr = tuple(int(v) for v in arr)
            if len(arr) != n:
                raise ValueError(f"{key} has length {len(arr)}, expected {n}")
            for x, v in enumerate(arr):
                if not 0 <= v < n:
                    raise IndexOutOfRange(f"{key}[{x}] = {v} not in [0, {n})")
            object.__setattr__(self, key, arr)
        names = tuple(self.names) if self.names else _default_names(n)
        if len(names) != n:
            raise ValueError(f"{len(names)} names for {n} elements")
        if len(set(names)) != n:
            raise ValueError("element names must be distinct")
        for name in names:
            check_name(name)
        object.__setattr__(self, "names", names)
        bad = associativity_witness(mul)
        if bad is not None:
            raise NonAssociative(*bad)

    @property
    def order(self) -> int:
        return len(self.mul)

    @property
    def elements(self) -> range:
        return range(len(self.mul))

    def has(self, unary: str) -> bool:
        return getattr(self, unary) is not None

    def require(self, unary: str, what: str = "operation") -> tuple[int, ...]:
        arr = getattr(self, unary)
        if arr is None:
            raise MissingUnary(what, unary)
        return arr

    def index(self, name: str) -> int:
        return self.names.index(name)

    def with_maps(self, **maps) -> FiniteUnarySemigroup:
        return replace(self, **maps)

    def tables_equal(self, other: FiniteUnarySemigroup) -> bool:
        """Literal equality of table and unary maps; names are ignored."""
        return self == other


def associativity_witness(mul: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    n = len(mul)
    for x in range(n):
        row = mul[x]
        for y in range(n):
            xy = row[y]
            rxy = mul[xy]
            my = mul[y]
            for z in range(n):
                if rxy[z] != row[my[z]]:
                    return (x, y, z)
    return None


def validate(mul, plus=None, minus=None, star=None, names=None) -> FiniteUnarySemigroup:
    """Build a :class:`FiniteUnarySemigroup`, raising on any defect."""
    return FiniteUnarySemigroup(mul, plus, minus, star, tuple(names) if names else ())


def relabel(S: FiniteUnarySemigroup, perm: Sequence[int]) -> FiniteUnarySemigroup:
    """Move element ``x`` to position ``perm[x]``."""
    n = S.order
    inv = [0] * n
    for x, px in enumerate(perm):
        inv[px] = x
    mul = tuple(tuple(perm[S.mul[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
    maps = {}
    for key in UNARY:
        arr = getattr(S, key)
        maps[key] = None if arr is None else tuple(perm[arr[inv[i]]] for i in range(n))
    names = tuple(S.names[inv[i]] for i in range(n))
    return FiniteUnarySemigroup(mul, names=names, **maps)


def opposite(S: FiniteUnarySemigroup) -> FiniteUnarySemigroup:
    """The opposite semigroup, with ``plus`` and ``minus`` exchanged."""
    n = S.order
    mul = tuple(tuple(S.mul[y][x] for y in range(n)) for x in range(n))
    return FiniteUnarySemigroup(mul, S.minus, S.plus, S.star, S.names)


def idempotents(S: FiniteUnarySemigroup) -> tuple[int, ...]:
    return tuple(x for x in S.elements if S.mul[x][x] == x)


def is_band_set(S: FiniteUnarySemigroup, elems: Iterable[int]) -> bool:
    """True when ``elems`` consists of idempotents and is closed under the product."""
    elems = set(elems)
    return all(S.mul[x][x] == x for x in elems) and all(
        S.mul[x][y] in elems for x in elems for y in elems
    )


def projections(S: FiniteUnarySemigroup) -> tuple[int, ...]:
    """The set S+ = {x+}, sorted.

    When ``minus`` is present and (4.1g) holds, S- must coincide with S+.
    """
    plus = S.require("plus", "projections")
    proj = tuple(sorted(set(plus)))
    if S.minus is not None and check_axiom(S, "4.1g").holds:
        if set(S.minus) != set(proj):
            raise TheoremViolation("S- differs from S+ although (4.1g) holds")
    return proj


# -- identities ---------------------------------------------------------------

Sides = list[tuple[int | None, int | None]]


@dataclass(frozen=True)
class Axiom:
    id: str
    arity: int
    needs: tuple[str, ...]
    sides: Callable[..., Sides]
    text: str


AXIOMS: dict[str, Axiom] = {}


def _axiom(id: str, arity: int, needs: tuple[str, ...], text: str):
    def register(fn):
        AXIOMS[id] = Axiom(id, arity, needs, fn, text)
        return fn

    return register


@_axiom("4.1a", 1, ("plus",), "x+ x = x")
def _(S, x):
    m, p = S.mul, S.plus
    return [(m[p[x]][x], x)]


@_axiom("4.1b", 2, ("plus",), "(x y)+ = (x y+)+")
def _(S, x, y):
    m, p = S.mul, S.plus
    return [(p[m[x][y]], p[m[x][p[y]]])]


@_axiom("4.1c", 2, ("plus",), "x+ y+ = (x+ y)+")
def _(S, x, y):
    m, p = S.mul, S.plus
    return [(m[p[x]][p[y]], p[m[p[x]][y]])]


@_axiom("4.1d", 1, ("minus",), "x x- = x")
def _(S, x):
    m, q = S.mul, S.minus
    return [(m[x][q[x]], x)]


@_axiom("4.1e", 2, ("minus",), "(x y)- = (x- y)-")
def _(S, x, y):
    m, q = S.mul, S.minus
    return [(q[m[x][y]], q[m[q[x]][y]])]


@_axiom("4.1f", 2, ("minus",), "x- y- = (x y-)-")
def _(S, x, y):
    m, q = S.mul, S.minus
    return [(m[q[x]][q[y]], q[m[x][q[y]]])]


@_axiom("4.1g", 1, ("plus", "minus"), "(x+)- = x+ and (x-)+ = x-")
def _(S, x):
    p, q = S.plus, S.minus
    return [(q[p[x]], p[x]), (p[q[x]], q[x])]


@_axiom("4.2", 2, ("plus", "minus"), "(x y+)- = x- y+ = (x- y)+")
def _(S, x, y):
    m, p, q = S.mul, S.plus, S.minus
    mid = m[q[x]][p[y]]
    return [(q[m[x][p[y]]], mid), (mid, p[m[q[x]][y]])]


@_axiom("5.1", 2, ("plus", "minus"), "x y+ = (x y)+ x and x- y = y (x y)-")
def _(S, x, y):
    m, p, q = S.mul, S.plus, S.minus
    xy = m[x][y]
    return [(m[x][p[y]], m[p[xy]][x]), (m[q[x]][y], m[y][q[xy]])]


@_axiom("CP", 2, ("plus|minus",), "x+ y+ = y+ x+")
def _(S, x, y):
    m = S.mul
    u = S.plus if S.plus is not None else S.minus
    return [(m[u[x]][u[y]], m[u[y]][u[x]])]


@_axiom("5.2", 2, ("plus",), "(x+ y+)+ = x+ y+ = y+ x+")
def _(S, x, y):
    m, p = S.mul, S.plus
    xy = m[p[x]][p[y]]
    return [(p[xy], xy), (xy, m[p[y]][p[x]])]


@_axiom("5.2-dual", 2, ("minus",), "(x- y-)- = x- y- = y- x-")
def _(S, x, y):
    m, q = S.mul, S.minus
    xy = m[q[x]][q[y]]
    return [(q[xy], xy), (xy, m[q[y]][q[x]])]


@_axiom("D3", 2, ("plus",), "(x y)+ x+ = x+ (x y)+ = (x y)+")
def _(S, x, y):
    m, p = S.mul, S.plus
    r = p[m[x][y]]
    return [(m[r][p[x]], m[p[x]][r]), (m[p[x]][r], r)]


@_axiom("8.1a", 1, ("star",), "x x* x = x")
def _(S, x):
    m, s = S.mul, S.star
    return [(m[m[x][s[x]]][x], x)]


@_axiom("8.1b", 1, ("star",), "x* x x* = x*")
def _(S, x):
    m, s = S.mul, S.star
    return [(m[m[s[x]][x]][s[x]], s[x])]


@_axiom("8.1c", 1, ("star",), "(x (x x)* x)* = x (x x)* x")
def _(S, x):
    m, s = S.mul, S.star
    e = m[m[x][s[m[x][x]]]][x]
    return [(s[e], e)]


@_axiom("8.1d", 2, ("star",), "x (x y y*)* = x y (x y)*")
def _(S, x, y):
    m, s = S.mul, S.star
    xy = m[x][y]
    return [(m[x][s[m[xy][s[y]]]], m[xy][s[xy]])]


@_axiom("8.1e", 2, ("star",), "(x* x y)* y = (x y)* x y")
def _(S, x, y):
    m, s = S.mul, S.star
    xy = m[x][y]
    return [(m[s[m[s[x]][xy]]][y], m[s[xy]][xy])]


@_axiom("8.2", 1, ("star",), "x** = x")
def _(S, x):
    s = S.star
    return [(s[s[x]], x)]


@_axiom("8.3a", 1, ("star",), "x* x** = x* x")
def _(S, x):
    m, s = S.mul, S.star
    return [(m[s[x]][s[s[x]]], m[s[x]][x])]


@_axiom("8.3b", 1, ("star",), "x** x* = x x*")
def _(S, x):
    m, s = S.mul, S.star
    return [(m[s[s[x]]][s[x]], m[x][s[x]])]


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    holds: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds

    def describe(self, names: Sequence[str] | None = None) -> str:
        if self.holds:
            return f"{self.axiom} holds"
        if self.witness is None:
            return f"{self.axiom} fails"
        w = self.witness if names is None else tuple(names[i] for i in self.witness)
        return f"{self.axiom} at ({','.join(str(v) for v in w)})"


def axiom(axiom_id: str) -> Axiom:
    try:
        return AXIOMS[axiom_id]
    except KeyError:
        raise UnknownAxiomId(axiom_id) from None


def _require(S: FiniteUnarySemigroup, ax: Axiom) -> None:
    for need in ax.needs:
        options = need.split("|")
        if all(getattr(S, o) is None for o in options):
            raise MissingUnary(f"axiom {ax.id}", need)


def check_axiom(S: FiniteUnarySemigroup, axiom_id: str) -> AxiomReport:
    """Check one identity over all tuples of elements."""
    ax = axiom(axiom_id)
    _require(S, ax)
    for xs in product(S.elements, repeat=ax.arity):
        for lhs, rhs in ax.sides(S, *xs):
            if lhs != rhs:
                return AxiomReport(ax.id, False, xs)
    return AxiomReport(ax.id, True)


def applicable(S: FiniteUnarySemigroup, axiom_id: str) -> bool:
    try:
        _require(S, axiom(axiom_id))
    except MissingUnary:
        return False
    return True


def first_failure(S: FiniteUnarySemigroup, axiom_ids: Iterable[str]) -> AxiomReport | None:
    for a in axiom_ids:
        report = check_axiom(S, a)
        if not report.holds:
            return report
    return None


# -- class predicates -----------------------------------------------------------

LEFT_LOCALISABLE = ("4.1a", "4.1b", "4.1c")
RIGHT_LOCALISABLE = ("4.1d", "4.1e", "4.1f")
LOCALISABLE = LEFT_LOCALISABLE + RIGHT_LOCALISABLE + ("4.1g",)
LEFT_EHRESMANN = ("4.1a", "4.1b", "5.2")
RIGHT_EHRESMANN = ("4.1d", "4.1e", "5.2-dual")
EHRESMANN = LEFT_EHRESMANN + RIGHT_EHRESMANN + ("4.1g",)
RESTRICTION = ("4.1a", "4.1c", "4.1d", "4.1f", "4.1g", "5.1", "CP")


def satisfies(S: FiniteUnarySemigroup, axiom_ids: Iterable[str]) -> bool:
    return first_failure(S, axiom_ids) is None


def is_left_localisable(S) -> bool:
    return S.plus is not None and satisfies(S, LEFT_LOCALISABLE)


def is_right_localisable(S) -> bool:
    return S.minus is not None and satisfies(S, RIGHT_LOCALISABLE)


def is_localisable(S) -> bool:
    return S.plus is not None and S.minus is not None and satisfies(S, LOCALISABLE)


def is_left_ehresmann(S) -> bool:
    return S.plus is not None and satisfies(S, LEFT_EHRESMANN)


def is_right_ehresmann(S) -> bool:
    return S.minus is not None and satisfies(S, RIGHT_EHRESMANN)


def is_ehresmann(S) -> bool:
    return S.plus is not None and S.minus is not None and satisfies(S, EHRESMANN)


def is_restriction(S) -> bool:
    return S.plus is not None and S.minus is not None and satisfies(S, RESTRICTION)


def is_band(S) -> bool:
    return all(S.mul[x][x] == x for x in S.elements)


def projections_form_band(S) -> bool:
    return is_band_set(S, S.require("plus"))


def is_reduced_monoid(S) -> bool:
    return is_localisable(S) and len(set(S.plus)) == 1


def require_localisable(S: FiniteUnarySemigroup) -> None:
    """Raise :class:`NotLocalisable` at the first failing axiom, left half first."""
    S.require("plus", "localisable check")
    bad = first_failure(S, LEFT_LOCALISABLE)
    if bad is None:
        S.require("minus", "localisable check")
        bad = first_failure(S, RIGHT_LOCALISABLE + ("4.1g",))
    if bad is not None:
        raise NotLocalisable(bad.axiom, bad.witness)


def local_monoid(S: FiniteUnarySemigroup, e: int) -> FiniteUnarySemigroup:
    """The submonoid M_e = {x : x+ = x- = e} as a reduced structure."""
    require_localisable(S)
    if S.plus[e] != e:
        raise NotAProjection(f"{S.names[e]} is not a projection")
    members = [x for x in S.elements if S.plus[x] == e and S.minus[x] == e]
    pos = {x: i for i, x in enumerate(members)}
    try:
        mul = [[pos[S.mul[x][y]] for y in members] for x in members]
    except KeyError:
        raise TheoremViolation(f"M_{S.names[e]} is not closed") from None
    const = [pos[e]] * len(members)
    return FiniteUnarySemigroup(mul, const, const, None, tuple(S.names[x] for x in members))
