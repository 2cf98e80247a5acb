"""Named class predicates and the aggregated classification report."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import core, relations, starloc
from .core import AxiomReport, FiniteUnarySemigroup, first_failure


@dataclass(frozen=True)
class Predicate:
    name: str
    needs: tuple[str, ...]  # unary maps that must be present
    test: Callable[[FiniteUnarySemigroup], bool]
    axioms: tuple[str, ...] = ()  # used to produce a witness on failure
    # optional necessary condition on x+ used to prune searches: (mul, x, e) -> bool
    plus_hint: Callable | None = None


def _idempotent_left_identity(mul, x, e):
    return mul[e][e] == e and mul[e][x] == x


def _projections_idempotent(S):
    return all(S.mul[p][p] == p for p in set(S.plus))


def plus_adequate(S: FiniteUnarySemigroup) -> bool:
    """S+ consists of idempotents and x is swung-R related to x+ for every x."""
    if not _projections_idempotent(S):
        return False
    R = relations.swung_R(S)
    return all(R.matrix[x][S.plus[x]] for x in S.elements)


def weakly_left_abundant(S: FiniteUnarySemigroup) -> bool:
    return plus_adequate(S) and relations.is_weakly_left_E_abundant(S, set(S.plus))


def generalised_d(S: FiniteUnarySemigroup) -> bool:
    return plus_adequate(S) and relations.is_generalised_D(S, set(S.plus)).holds


def _fundamental(S):
    return core.is_localisable(S) and relations.is_fundamental(S)


def _star_compatible(S):
    return starloc.check_star_compatibility(S).holds


PREDICATES: dict[str, Predicate] = {
    p.name: p
    for p in [
        Predicate("semigroup", (), lambda S: True),
        Predicate("band", (), core.is_band),
        Predicate("left-localisable", ("plus",), core.is_left_localisable,
                  core.LEFT_LOCALISABLE, _idempotent_left_identity),
        Predicate("right-localisable", ("minus",), core.is_right_localisable,
                  core.RIGHT_LOCALISABLE),
        Predicate("localisable", ("plus", "minus"), core.is_localisable,
                  core.LOCALISABLE, _idempotent_left_identity),
        Predicate("band-of-projections", ("plus",), core.projections_form_band),
        Predicate("CP", ("plus",), lambda S: core.satisfies(S, ("CP",)), ("CP",)),
        Predicate("left-ehresmann", ("plus",), core.is_left_ehresmann, core.LEFT_EHRESMANN),
        Predicate("right-ehresmann", ("minus",), core.is_right_ehresmann, core.RIGHT_EHRESMANN),
        Predicate("ehresmann", ("plus", "minus"), core.is_ehresmann, core.EHRESMANN,
                  _idempotent_left_identity),
        Predicate("restriction", ("plus", "minus"), core.is_restriction, core.RESTRICTION,
                  _idempotent_left_identity),
        Predicate("reduced-monoid", ("plus", "minus"), core.is_reduced_monoid, core.LOCALISABLE),
        Predicate("D3", ("plus",), lambda S: core.satisfies(S, ("D3",)), ("D3",)),
        Predicate("left-localisable-D3", ("plus",),
                  lambda S: core.is_left_localisable(S) and core.satisfies(S, ("D3",)),
                  core.LEFT_LOCALISABLE + ("D3",), _idempotent_left_identity),
        Predicate("weakly-left-E-abundant", ("plus",), weakly_left_abundant, (),
                  _idempotent_left_identity),
        Predicate("generalised-D", ("plus",), generalised_d, (), _idempotent_left_identity),
        Predicate("star-localisable", ("star",), starloc.is_star_localisable,
                  starloc.STAR_AXIOMS),
        Predicate("star-compatible", ("plus", "minus", "star"), _star_compatible),
        Predicate("fundamental", ("plus", "minus"), _fundamental),
    ]
}


def predicate(name: str) -> Predicate:
    try:
        return PREDICATES[name]
    except KeyError:
        raise KeyError(f"unknown class {name!r}; known: {', '.join(PREDICATES)}") from None


def applies(pred: Predicate, S: FiniteUnarySemigroup) -> bool:
    return all(S.has(u) for u in pred.needs)


def holds(name: str, S: FiniteUnarySemigroup) -> bool:
    """The predicate, with missing unary maps counting as failure."""
    pred = predicate(name)
    return applies(pred, S) and pred.test(S)


def witness(name: str, S: FiniteUnarySemigroup) -> AxiomReport | None:
    """The first failing axiom of an axiom-defined predicate, if any."""
    pred = predicate(name)
    if not applies(pred, S) or not pred.axioms:
        return None
    return first_failure(S, pred.axioms)


@dataclass
class ClassificationReport:
    """``results`` maps predicate name to True/False, or None when not applicable."""

    results: dict[str, bool | None] = field(default_factory=dict)
    witnesses: dict[str, AxiomReport] = field(default_factory=dict)

    def __getitem__(self, name: str) -> bool | None:
        return self.results[name]


def classify(S: FiniteUnarySemigroup) -> ClassificationReport:
    report = ClassificationReport()
    for name, pred in PREDICATES.items():
        if name == "semigroup":
            continue
        if not applies(pred, S):
            report.results[name] = None
            continue
        if name == "fundamental" and not core.is_localisable(S):
            report.results[name] = None
            continue
        if name in ("weakly-left-E-abundant", "generalised-D") and not _projections_idempotent(S):
            report.results[name] = None
            continue
        ok = pred.test(S)
        report.results[name] = ok
        if not ok:
            w = witness(name, S)
            if w is not None:
                report.witnesses[name] = w
    return report
