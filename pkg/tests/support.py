"""Shared fixtures data: cached enumerations and small independent helpers."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from transcat.core import FiniteUnarySemigroup
from transcat.enumeration import SearchSpec, enumerate_structures


@lru_cache(maxsize=None)
def structures(cls: str, n: int) -> tuple[FiniteUnarySemigroup, ...]:
    return tuple(enumerate_structures(SearchSpec(n, cls)))


def upto(cls: str, max_order: int) -> list[FiniteUnarySemigroup]:
    return [S for n in range(1, max_order + 1) for S in structures(cls, n)]


def brute_isomorphic(S: FiniteUnarySemigroup, T: FiniteUnarySemigroup) -> bool:
    """Search for a bijection preserving the product and every present map."""
    if S.order != T.order:
        return False
    keys = [k for k in ("plus", "minus", "star") if getattr(S, k) is not None]
    if keys != [k for k in ("plus", "minus", "star") if getattr(T, k) is not None]:
        return False
    n = S.order
    for phi in permutations(range(n)):
        if all(phi[S.mul[x][y]] == T.mul[phi[x]][phi[y]] for x, y in product(range(n), repeat=2)) \
                and all(phi[getattr(S, k)[x]] == getattr(T, k)[phi[x]] for k in keys for x in range(n)):
            return True
    return False


def assoc(mul) -> bool:
    n = len(mul)
    return all(mul[mul[x][y]][z] == mul[x][mul[y][z]] for x, y, z in product(range(n), repeat=3))
