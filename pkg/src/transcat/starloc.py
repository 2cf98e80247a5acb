"""Regular unary semigroups (S, ., *) whose trace category is a groupoid."""

from __future__ import annotations

from itertools import product

from .core import (
    LOCALISABLE,
    AxiomReport,
    FiniteUnarySemigroup,
    check_axiom,
    first_failure,
    idempotents,
    is_localisable,
)
from .errors import StarAxiomsFail, TheoremViolation

STAR_AXIOMS = ("8.1a", "8.1b", "8.1c", "8.1d", "8.1e")
# consequences checked alongside the axioms
STAR_DERIVED = ("8.2", "8.3a", "8.3b")


def check_star_axioms(S: FiniteUnarySemigroup) -> list[AxiomReport]:
    S.require("star", "star axioms")
    return [check_axiom(S, a) for a in STAR_AXIOMS + STAR_DERIVED]


def is_regular_unary(S: FiniteUnarySemigroup) -> bool:
    return S.star is not None and first_failure(S, STAR_AXIOMS[:2]) is None


def is_star_localisable(S: FiniteUnarySemigroup) -> bool:
    return S.star is not None and first_failure(S, STAR_AXIOMS) is None


def derive_projections_from_star(S: FiniteUnarySemigroup) -> FiniteUnarySemigroup:
    """Fill in x+ = x x* and x- = x* x; the result is localisable."""
    S.require("star", "deriving projections")
    bad = first_failure(S, STAR_AXIOMS)
    if bad is not None:
        raise StarAxiomsFail(bad.axiom, bad.witness)
    m, s = S.mul, S.star
    plus = tuple(m[x][s[x]] for x in S.elements)
    minus = tuple(m[s[x]][x] for x in S.elements)
    T = S.with_maps(plus=plus, minus=minus)
    bad = first_failure(T, LOCALISABLE)
    if bad is not None:
        raise TheoremViolation(f"derived projections fail {bad.describe(S.names)}")
    return T


def check_star_compatibility(S: FiniteUnarySemigroup) -> AxiomReport:
    """Whether x+ = x x* and x- = x* x for every x.

    When the answer is yes on a localisable S whose star is an inverse map,
    the remaining star axioms must hold as well, and this is asserted.
    """
    plus, minus = S.require("plus"), S.require("minus")
    m, s = S.mul, S.require("star")
    for x in S.elements:
        if plus[x] != m[x][s[x]] or minus[x] != m[s[x]][x]:
            return AxiomReport("star-compatibility", False, (x,))
    if is_localisable(S) and is_regular_unary(S):
        bad = first_failure(S, STAR_AXIOMS[2:])
        if bad is not None:
            raise TheoremViolation(
                f"compatible inverse map on a localisable semigroup fails {bad.axiom}"
            )
    return AxiomReport("star-compatibility", True)


def with_derived_projections(S: FiniteUnarySemigroup) -> FiniteUnarySemigroup:
    if S.plus is None or S.minus is None:
        return derive_projections_from_star(S)
    return S


def idempotents_are_projections(S: FiniteUnarySemigroup) -> AxiomReport:
    """Every idempotent x has x = x+ = x-, and E(S) is a band."""
    T = with_derived_projections(S)
    E = idempotents(T)
    for x in E:
        if not x == T.plus[x] == T.minus[x]:
            return AxiomReport("idempotents-are-projections", False, (x,))
    if is_star_localisable(T):
        for x, y in product(E, repeat=2):
            if T.mul[x][y] not in E:
                raise TheoremViolation("idempotents of a *-localisable semigroup not closed")
    return AxiomReport("idempotents-are-projections", True)


def star_antiautomorphism_check(S: FiniteUnarySemigroup) -> AxiomReport:
    """Whether (x y)* = y* x* for all x, y."""
    m, s = S.mul, S.require("star")
    for x, y in product(S.elements, repeat=2):
        if s[m[x][y]] != m[s[y]][s[x]]:
            return AxiomReport("anti-automorphism", False, (x, y))
    return AxiomReport("anti-automorphism", True)


def inverse_candidates(mul, x: int) -> list[int]:
    """Inverses of x: y with x y x = x and y x y = y."""
    n = len(mul)
    return [y for y in range(n) if mul[mul[x][y]][x] == x and mul[mul[y][x]][y] == y]


def star_maps(S: FiniteUnarySemigroup):
    """Yield every map * making (S, ., *) *-localisable, in lexicographic order."""
    choices = [inverse_candidates(S.mul, x) for x in S.elements]
    if any(not c for c in choices):
        return
    for star in product(*choices):
        T = FiniteUnarySemigroup(S.mul, star=star, names=S.names)
        if first_failure(T, STAR_AXIOMS[2:]) is None:
            yield star
