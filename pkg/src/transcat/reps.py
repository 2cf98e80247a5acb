"""Actions of a localisable semigroup on its projections.

The right action sends (p, s) to (p s)- and gives the representation
``delta``; the left action sends (s, p) to (s p)+ and gives ``gamma``.
Right-action maps compose left to right, (p)(s delta)(t delta); left-action
maps compose right to left, gamma(s t) = gamma(s) o gamma(t).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import FiniteUnarySemigroup, require_localisable
from .functor import AlgebraMorphism, check_pm_morphism
from .relations import BinaryRelationOnElements, mu_relation
from .errors import TheoremViolation


@dataclass(frozen=True)
class TransformationMap:
    """A total map on the projections, which are listed in ``domain``."""

    domain: tuple[int, ...]
    image: tuple[int, ...]
    side: str  # "right" for delta, "left" for gamma

    def __call__(self, p: int) -> int:
        return self.image[self.domain.index(p)]

    def then(self, other: TransformationMap) -> TransformationMap:
        """Apply ``self`` first, then ``other``."""
        return TransformationMap(self.domain, tuple(other(v) for v in self.image), self.side)

    def after(self, other: TransformationMap) -> TransformationMap:
        """Apply ``other`` first, then ``self``."""
        return other.then(self)


def _projections(S):
    return tuple(sorted(set(S.plus)))


def delta(S: FiniteUnarySemigroup) -> list[TransformationMap]:
    """s -> (p -> (p s)-), checked to be a morphism into the transformations."""
    require_localisable(S)
    P = _projections(S)
    m, q = S.mul, S.minus
    reps = [TransformationMap(P, tuple(q[m[p][s]] for p in P), "right") for s in S.elements]
    for s, t in product(S.elements, repeat=2):
        if reps[m[s][t]] != reps[s].then(reps[t]):
            raise TheoremViolation(f"right action is not a morphism at {(s, t)}")
    return reps


def gamma(S: FiniteUnarySemigroup) -> list[TransformationMap]:
    """s -> (p -> (s p)+), checked to satisfy gamma(s t) = gamma(s) o gamma(t)."""
    require_localisable(S)
    P = _projections(S)
    m, pl = S.mul, S.plus
    reps = [TransformationMap(P, tuple(pl[m[s][p]] for p in P), "left") for s in S.elements]
    for s, t in product(S.elements, repeat=2):
        if reps[m[s][t]] != reps[s].after(reps[t]):
            raise TheoremViolation(f"left action is not a morphism at {(s, t)}")
    return reps


def inner_left(S: FiniteUnarySemigroup, p: int) -> TransformationMap:
    P = _projections(S)
    return TransformationMap(P, tuple(S.mul[p][r] for r in P), "left")


def inner_right(S: FiniteUnarySemigroup, p: int) -> TransformationMap:
    P = _projections(S)
    return TransformationMap(P, tuple(S.mul[r][p] for r in P), "right")


def projection_band(S: FiniteUnarySemigroup) -> FiniteUnarySemigroup:
    """S+ as a band in its own right, with p+ = p- = p."""
    P = _projections(S)
    pos = {p: i for i, p in enumerate(P)}
    mul = [[pos[S.mul[p][r]] for r in P] for p in P]
    ident = tuple(range(len(P)))
    return FiniteUnarySemigroup(mul, ident, ident, None, tuple(S.names[p] for p in P))


def omega_embedding(S: FiniteUnarySemigroup) -> AlgebraMorphism:
    """p -> (lambda_p, rho_p) from the band of projections onto the band of
    inner bitranslations; checked injective and multiplicative."""
    require_localisable(S)
    B = projection_band(S)
    P = _projections(S)
    pairs = [(inner_left(S, p).image, inner_right(S, p).image) for p in P]
    if len(set(pairs)) != len(pairs):
        raise TheoremViolation("inner bitranslations do not separate projections")
    omega = sorted(set(pairs))
    pos = {w: i for i, w in enumerate(omega)}
    index = {p: i for i, p in enumerate(P)}

    def compose(a, b):
        (la, ra), (lb, rb) = a, b
        left = tuple(la[index[v]] for v in lb)
        right = tuple(rb[index[v]] for v in ra)
        return (left, right)

    try:
        mul = [[pos[compose(a, b)] for b in omega] for a in omega]
    except KeyError:
        raise TheoremViolation("inner bitranslations are not closed") from None
    ident = tuple(range(len(omega)))
    names = tuple(f"w{i}" for i in ident)
    Omega = FiniteUnarySemigroup(mul, ident, ident, None, names)
    phi = AlgebraMorphism(B, Omega, tuple(pos[w] for w in pairs))
    report = check_pm_morphism(phi)
    if not report.holds:
        raise TheoremViolation(f"bitranslation map is not a morphism: {report.describe()}")
    return phi


def kernel_of_gamma_delta(S: FiniteUnarySemigroup) -> BinaryRelationOnElements:
    """{(s, t) : gamma s = gamma t and s delta = t delta}.

    Refined by s+ = t+ and s- = t- this must be exactly mu, which is asserted.
    """
    g, d = gamma(S), delta(S)
    kernel = BinaryRelationOnElements.from_predicate(
        S.order, lambda s, t: g[s] == g[t] and d[s] == d[t], "equivalence"
    )
    same_pm = BinaryRelationOnElements.from_predicate(
        S.order, lambda s, t: S.plus[s] == S.plus[t] and S.minus[s] == S.minus[t]
    )
    if not (kernel & same_pm).same_pairs(mu_relation(S)):
        raise TheoremViolation("refined kernel of the representations differs from mu")
    return kernel
