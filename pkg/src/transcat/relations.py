"""Relations on the elements of a unary semigroup.

Covers the swung preorder and its symmetric core, E-abundance and
(generalised) D-semigroup tests, the orders on S, the relation mu and the
enumeration of congruences.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator

from .core import (
    LEFT_LOCALISABLE,
    AxiomReport,
    FiniteUnarySemigroup,
    first_failure,
    idempotents,
    is_left_localisable,
    is_localisable,
    require_localisable,
)
from .errors import (
    NotACrossSection,
    NotIdempotents,
    NotLocalisable,
    OrderTooLarge,
    TheoremViolation,
)

KINDS = ("relation", "preorder", "equivalence", "partial-order", "congruence")


@dataclass(frozen=True)
class BinaryRelationOnElements:
    matrix: tuple[tuple[bool, ...], ...]
    kind: str = "relation"

    def __post_init__(self):
        m = tuple(tuple(bool(v) for v in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        if self.kind not in KINDS:
            raise ValueError(f"unknown relation kind {self.kind!r}")
        if any(len(row) != len(m) for row in m):
            raise ValueError("relation matrix must be square")
        ok = {
            "relation": True,
            "preorder": self.is_reflexive() and self.is_transitive(),
            "equivalence": self.is_equivalence(),
            "partial-order": self.is_reflexive() and self.is_antisymmetric() and self.is_transitive(),
            "congruence": self.is_equivalence(),
        }[self.kind]
        if not ok:
            raise ValueError(f"matrix is not a {self.kind}")

    @classmethod
    def from_predicate(cls, n: int, pred: Callable[[int, int], bool], kind: str = "relation"):
        return cls(tuple(tuple(pred(s, t) for t in range(n)) for s in range(n)), kind)

    @classmethod
    def from_blocks(cls, n: int, labels: Iterable[int], kind: str = "equivalence"):
        labels = list(labels)
        return cls.from_predicate(n, lambda s, t: labels[s] == labels[t], kind)

    @property
    def n(self) -> int:
        return len(self.matrix)

    def __contains__(self, pair) -> bool:
        s, t = pair
        return self.matrix[s][t]

    def pairs(self) -> list[tuple[int, int]]:
        return [(s, t) for s, t in product(range(self.n), repeat=2) if self.matrix[s][t]]

    def __le__(self, other: BinaryRelationOnElements) -> bool:
        return all(other.matrix[s][t] for s, t in self.pairs())

    def __and__(self, other: BinaryRelationOnElements) -> BinaryRelationOnElements:
        return BinaryRelationOnElements.from_predicate(
            self.n, lambda s, t: self.matrix[s][t] and other.matrix[s][t]
        )

    def same_pairs(self, other: BinaryRelationOnElements) -> bool:
        return self.matrix == other.matrix

    def is_reflexive(self) -> bool:
        return all(self.matrix[s][s] for s in range(self.n))

    def is_symmetric(self) -> bool:
        return all(self.matrix[t][s] for s, t in self.pairs())

    def is_antisymmetric(self) -> bool:
        return all(s == t or not self.matrix[t][s] for s, t in self.pairs())

    def is_transitive(self) -> bool:
        m = self.matrix
        return all(m[s][u] for s, t in self.pairs() for u in range(self.n) if m[t][u])

    def is_equivalence(self) -> bool:
        return self.is_reflexive() and self.is_symmetric() and self.is_transitive()

    def is_identity(self) -> bool:
        return all(self.matrix[s][t] == (s == t) for s, t in product(range(self.n), repeat=2))

    def is_universal(self) -> bool:
        return all(all(row) for row in self.matrix)

    def symmetric_core(self) -> BinaryRelationOnElements:
        m = self.matrix
        return BinaryRelationOnElements.from_predicate(
            self.n, lambda s, t: m[s][t] and m[t][s], "equivalence"
        )

    def classes(self) -> list[tuple[int, ...]]:
        """Blocks of an equivalence, each sorted, ordered by least member."""
        seen: set[int] = set()
        out = []
        for s in range(self.n):
            if s not in seen:
                block = tuple(t for t in range(self.n) if self.matrix[s][t])
                seen.update(block)
                out.append(block)
        return out


# -- swung relations ---------------------------------------------------------------

def swung_leq_R(S: FiniteUnarySemigroup) -> BinaryRelationOnElements:
    """s <= t when p t = t implies p s = s for every projection p.

    On left localisable input the four equivalent forms of the relation are
    cross-checked pairwise.
    """
    m = S.mul
    P = sorted(set(S.require("plus", "swung preorder")))
    rel = BinaryRelationOnElements.from_predicate(
        S.order,
        lambda s, t: all(m[p][t] != t or m[p][s] == s for p in P),
        "preorder",
    )
    if is_left_localisable(S):
        for s, t in product(S.elements, repeat=2):
            forms = swung_forms(S, rel, s, t)
            if len(set(forms)) != 1:
                raise TheoremViolation(f"swung preorder forms disagree at {(s, t)}: {forms}")
    return rel


def swung_forms(S, rel, s, t) -> tuple[bool, bool, bool, bool]:
    """The four conditions that coincide on left localisable semigroups."""
    m, p = S.mul, S.plus
    return (
        rel.matrix[s][t],
        rel.matrix[p[s]][p[t]],
        m[p[t]][p[s]] == p[s],
        m[p[t]][s] == s,
    )


def swung_R(S: FiniteUnarySemigroup) -> BinaryRelationOnElements:
    return swung_leq_R(S).symmetric_core()


def _check_idempotents(S, E) -> frozenset[int]:
    E = frozenset(E)
    if not E <= set(idempotents(S)):
        raise NotIdempotents(f"not idempotent: {sorted(E - set(idempotents(S)))}")
    return E


def is_weakly_left_E_abundant(S: FiniteUnarySemigroup, E: Iterable[int]) -> bool:
    """Every swung R-class contains an element of ``E``."""
    E = _check_idempotents(S, E)
    return all(E.intersection(c) for c in swung_R(S).classes())


def is_generalised_D(S: FiniteUnarySemigroup, E: Iterable[int]) -> AxiomReport:
    """Every swung R-class contains exactly one element of ``E``.

    The witness on failure is the offending class.
    """
    E = _check_idempotents(S, E)
    for c in swung_R(S).classes():
        if len(E.intersection(c)) != 1:
            return AxiomReport("generalised-D", False, c)
    return AxiomReport("generalised-D", True)


def d_modification(S: FiniteUnarySemigroup, X: Iterable[int]) -> FiniteUnarySemigroup:
    """Replace x+ by the member of the cross-section ``X`` swung-related to it.

    Returns the left structure (S, ., (+)) with the new map in ``plus``.
    """
    S.require("plus", "cross-section modification")
    bad = first_failure(S, LEFT_LOCALISABLE)
    if bad is not None:
        raise NotLocalisable(bad.axiom, bad.witness)
    X = frozenset(X)
    P = set(S.plus)
    if not X <= P:
        raise NotACrossSection("cross-section must consist of projections")
    R = swung_R(S)
    rep = {}
    for c in R.classes():
        hits = X.intersection(c)
        if P.intersection(c) and len(hits) != 1:
            names = [S.names[x] for x in c]
            raise NotACrossSection(f"class {names} meets the cross-section {len(hits)} times")
        if hits:
            (x,) = hits
            for s in c:
                rep[s] = x
    oplus = tuple(rep[S.plus[s]] for s in S.elements)
    for s in S.elements:
        if S.mul[oplus[s]][s] != s:
            raise TheoremViolation(f"modified projection is not a left identity at {s}")
    return FiniteUnarySemigroup(S.mul, plus=oplus, names=S.names)


# -- orders ---------------------------------------------------------------------------

def projection_order(S: FiniteUnarySemigroup) -> BinaryRelationOnElements:
    """s below t when s = s+ t = t s-."""
    m, p, q = S.mul, S.require("plus"), S.require("minus")
    kind = "partial-order" if is_localisable(S) else "relation"
    return BinaryRelationOnElements.from_predicate(
        S.order, lambda s, t: s == m[p[s]][t] == m[t][q[s]], kind
    )


def mitsch_order(S: FiniteUnarySemigroup) -> BinaryRelationOnElements:
    """s <= t when s = t or s = x t = t y = x t y for some x, y in S."""
    m, n = S.mul, S.order

    def below(s, t):
        if s == t:
            return True
        xs = [x for x in range(n) if m[x][t] == s]
        ys = [y for y in range(n) if m[t][y] == s]
        return any(m[m[x][t]][y] == s for x in xs for y in ys)

    return BinaryRelationOnElements.from_predicate(n, below, "partial-order")


def natural_orders(S: FiniteUnarySemigroup):
    """Both orders; on localisable input the projection order is checked to
    sit inside the Mitsch order and to agree with it on projections."""
    po = projection_order(S)
    mo = mitsch_order(S)
    if is_localisable(S):
        if not po <= mo:
            raise TheoremViolation("projection order not contained in the Mitsch order")
        P = sorted(set(S.plus))
        for s, t in product(P, repeat=2):
            if po.matrix[s][t] != mo.matrix[s][t]:
                raise TheoremViolation(f"orders disagree on projections {(s, t)}")
    return po, mo


# -- Green's relations ------------------------------------------------------------------

def _ideal(S, s, side):
    m = S.mul
    if side == "right":
        return frozenset([s, *(m[s][u] for u in S.elements)])
    if side == "left":
        return frozenset([s, *(m[u][s] for u in S.elements)])
    return frozenset([s, *(m[u][s] for u in S.elements), *(m[s][u] for u in S.elements),
                      *(m[m[u][s]][v] for u in S.elements for v in S.elements)])


def greens(S: FiniteUnarySemigroup) -> dict[str, BinaryRelationOnElements]:
    """Green's R, L, H, D and J, computed from principal ideals of S with an
    identity adjoined."""
    n = S.order
    ideals = {side: [_ideal(S, s, side) for s in S.elements] for side in ("right", "left", "two")}

    def same(side):
        I = ideals[side]
        return BinaryRelationOnElements.from_predicate(n, lambda s, t: I[s] == I[t], "equivalence")

    R, L, J = same("right"), same("left"), same("two")
    H = BinaryRelationOnElements(tuple(
        tuple(R.matrix[s][t] and L.matrix[s][t] for t in range(n)) for s in range(n)), "equivalence")
    # D = R o L; on a finite semigroup it coincides with J, which is asserted
    D = BinaryRelationOnElements.from_predicate(
        n, lambda s, t: any(R.matrix[s][u] and L.matrix[u][t] for u in range(n)), "equivalence")
    if not D.same_pairs(J):
        raise TheoremViolation("D and J differ on a finite semigroup")
    return {"R": R, "L": L, "H": H, "D": D, "J": J}


# -- mu and congruences --------------------------------------------------------------

def mu_relation(S: FiniteUnarySemigroup) -> BinaryRelationOnElements:
    """(s, t) in mu iff s+ = t+, s- = t-, (s p)+ = (t p)+ and (p s)- = (p t)- for all
    projections p.  The reformulation with both unary maps on both sides is
    checked to agree."""
    require_localisable(S)
    m, pl, mi = S.mul, S.plus, S.minus
    P = sorted(set(pl))

    def related(s, t):
        return (
            pl[s] == pl[t]
            and mi[s] == mi[t]
            and all(pl[m[s][p]] == pl[m[t][p]] and mi[m[p][s]] == mi[m[p][t]] for p in P)
        )

    def related_alt(s, t):
        return all(
            u[m[p][s]] == u[m[p][t]] and u[m[s][p]] == u[m[t][p]]
            for p in P
            for u in (pl, mi)
        )

    mu = BinaryRelationOnElements.from_predicate(S.order, related, "equivalence")
    alt = BinaryRelationOnElements.from_predicate(S.order, related_alt)
    if not mu.same_pairs(alt):
        raise TheoremViolation("mu and its reformulation disagree")
    return mu


def is_compatible(S: FiniteUnarySemigroup, rel: BinaryRelationOnElements, pm: bool = False) -> bool:
    """Compatibility with the product, and with + and - when ``pm``."""
    m = S.mul
    for s, t in rel.pairs():
        for u in S.elements:
            if not rel.matrix[m[u][s]][m[u][t]] or not rel.matrix[m[s][u]][m[t][u]]:
                return False
        if pm and not (rel.matrix[S.plus[s]][S.plus[t]] and rel.matrix[S.minus[s]][S.minus[t]]):
            return False
    return True


def is_projection_separating(S: FiniteUnarySemigroup, rel: BinaryRelationOnElements) -> bool:
    P = set(S.require("plus"))
    return all(s == t for s, t in rel.pairs() if s in P and t in P)


def mu_is_congruence(S: FiniteUnarySemigroup) -> bool:
    """Whether mu happens to be a +-congruence on this instance."""
    return is_compatible(S, mu_relation(S), pm=True)


def is_fundamental(S: FiniteUnarySemigroup) -> bool:
    return mu_relation(S).is_identity()


TAGS = {
    "semigroup": "semigroup",
    "pm": "pm",
    "±": "pm",
    "projection-separating-pm": "ps-pm",
    "projection-separating-±": "ps-pm",
}

DEFAULT_MAX_ORDER = 5


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All restricted growth strings of length n, in lexicographic order."""
    labels = [0] * n

    def grow(i, top):
        if i == n:
            yield tuple(labels)
            return
        for b in range(top + 2):
            labels[i] = b
            yield from grow(i + 1, max(top, b))

    if n:
        yield from grow(1, 0)
    else:
        yield ()


def congruences(
    S: FiniteUnarySemigroup, tag: str = "semigroup", max_order: int = DEFAULT_MAX_ORDER
) -> list[BinaryRelationOnElements]:
    """Every congruence of the given kind, in restricted-growth-string order.

    Partial labellings are abandoned as soon as a compatibility condition
    between already-labelled elements fails.
    """
    if tag not in TAGS:
        raise ValueError(f"unknown congruence tag {tag!r}")
    tag = TAGS[tag]
    n = S.order
    if n > max_order:
        raise OrderTooLarge(f"order {n} exceeds the congruence bound {max_order}")
    pm = tag != "semigroup"
    if pm:
        require_localisable(S)
    m = S.mul
    proj = set(S.plus) if pm else set()
    labels = [0] * n
    found = []

    def consistent(i):
        # every constraint whose elements already carry labels
        for s, t in product(range(i + 1), repeat=2):
            if s == t or labels[s] != labels[t]:
                continue
            if tag == "ps-pm" and s in proj and t in proj:
                return False
            pairs = [(m[u][s], m[u][t]) for u in range(n)] + [(m[s][u], m[t][u]) for u in range(n)]
            if pm:
                pairs += [(S.plus[s], S.plus[t]), (S.minus[s], S.minus[t])]
            for a, b in pairs:
                if a <= i and b <= i and labels[a] != labels[b]:
                    return False
        return True

    def grow(i, top):
        if i == n:
            rel = BinaryRelationOnElements.from_blocks(n, labels, "congruence")
            if is_compatible(S, rel, pm) and (tag != "ps-pm" or is_projection_separating(S, rel)):
                found.append(rel)
            return
        for b in range(top + 2):
            labels[i] = b
            if consistent(i):
                grow(i + 1, max(top, b))

    labels[0] = 0
    if consistent(0):
        grow(1, 0)
    return found
