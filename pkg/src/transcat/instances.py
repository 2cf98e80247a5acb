"""Small named structures used throughout the tests, the CLI and the corpus."""

from __future__ import annotations

from .core import FiniteUnarySemigroup, idempotents


def as_band(mul, names=None) -> FiniteUnarySemigroup:
    """A band with the localisable structure x+ = x- = x (and x* = x)."""
    ident = tuple(range(len(mul)))
    return FiniteUnarySemigroup(mul, ident, ident, ident, tuple(names or ()))


def left_zero_band(n: int = 2) -> FiniteUnarySemigroup:
    """x y = x."""
    return as_band([[x] * n for x in range(n)])


def right_zero_band(n: int = 2) -> FiniteUnarySemigroup:
    """x y = y."""
    return as_band([list(range(n)) for _ in range(n)])


def chain(n: int = 2) -> FiniteUnarySemigroup:
    """The n-element chain semilattice 0 < 1 < ... with x y = min(x, y)."""
    return as_band([[min(x, y) for y in range(n)] for x in range(n)])


def monoid_identity(mul) -> int | None:
    n = len(mul)
    for e in range(n):
        if all(mul[e][x] == x == mul[x][e] for x in range(n)):
            return e
    return None


def reduced_monoid(mul, names=None) -> FiniteUnarySemigroup:
    """A monoid regarded as localisable with x+ = x- = 1."""
    one = monoid_identity(mul)
    if one is None:
        raise ValueError("table has no identity element")
    const = (one,) * len(mul)
    return FiniteUnarySemigroup(mul, const, const, None, tuple(names or ()))


def semilattice2() -> FiniteUnarySemigroup:
    """{0, 1} with 0 < 1, x+ = x- = 1 and the only inverse map x* = x."""
    return FiniteUnarySemigroup([[0, 0], [0, 1]], (1, 1), (1, 1), (0, 1), ("0", "1"))


def cyclic_group(n: int) -> FiniteUnarySemigroup:
    """Z_n with x* = -x and x+ = x- = 0."""
    mul = [[(x + y) % n for y in range(n)] for x in range(n)]
    zero = (0,) * n
    star = tuple((-x) % n for x in range(n))
    return FiniteUnarySemigroup(mul, zero, zero, star, tuple(f"g{i}" for i in range(n)))


def example6() -> FiniteUnarySemigroup:
    """The semigroup with zero generated by idempotents e, f with f e = 0.

    Elements e, f, a = e f, 0; plus is e+ = a+ = e, f+ = f, 0+ = 0.
    """
    e, f, a, z = range(4)
    mul = [
        [e, a, a, z],
        [z, f, z, z],
        [z, a, z, z],
        [z, z, z, z],
    ]
    return FiniteUnarySemigroup(mul, plus=(e, f, e, z), names=("e", "f", "a", "0"))


def adjoin_identity(S: FiniteUnarySemigroup, name: str = "1") -> FiniteUnarySemigroup:
    """S with a new identity 1 satisfying 1+ = 1- = 1 (and 1* = 1)."""
    n = S.order
    mul = [list(row) + [x] for x, row in enumerate(S.mul)] + [list(range(n + 1))]

    def extend(arr):
        return None if arr is None else tuple(arr) + (n,)

    return FiniteUnarySemigroup(
        mul, extend(S.plus), extend(S.minus), extend(S.star), S.names + (name,)
    )


def idempotent_set(S: FiniteUnarySemigroup) -> frozenset[int]:
    return frozenset(idempotents(S))
