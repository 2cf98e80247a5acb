"""Exhaustive generation of small unary semigroups up to isomorphism.

Tables are filled cell by cell in row-major order with associativity
checked against every fully determined triple.  Isomorph rejection is
orderly: after each completed row r the partial table is compared with its
images under the permutations that fix {0..r} setwise, and a branch dies
as soon as one of them is lexicographically smaller.  Complete tables
survive only if they are the least relabelling of themselves, so every
isomorphism class of tables appears once, in canonical form.  Unary maps
are then attached and deduplicated under the automorphism group of the
table.

Isomorphism means a bijection preserving the product and every present
unary map; anti-isomorphisms are not identified.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator

from . import classify
from .core import UNARY, FiniteUnarySemigroup, associativity_witness, first_failure, is_band_set
from .errors import OrderTooLarge
from .starloc import STAR_AXIOMS, inverse_candidates

CLASSES = (
    "semigroup",
    "band",
    "localisable",
    "left-localisable",
    "star-localisable",
    "ehresmann",
    "restriction",
)

MAX_ORDER = {"band": 6, "semigroup": 6}
DEFAULT_MAX_ORDER = 5


@dataclass(frozen=True)
class SearchSpec:
    order: int
    cls: str = "localisable"
    isomorphism: bool = True
    jobs: int = 1
    max_order: int | None = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        if self.cls not in CLASSES:
            raise ValueError(f"unknown class {self.cls!r}; expected one of {', '.join(CLASSES)}")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")

    @property
    def bound(self) -> int:
        if self.max_order is not None:
            return self.max_order
        return MAX_ORDER.get(self.cls, DEFAULT_MAX_ORDER)


# -- canonical form -----------------------------------------------------------------

def _inverse(perm):
    inv = [0] * len(perm)
    for x, px in enumerate(perm):
        inv[px] = x
    return inv


def _relabel_flat(mul, pi, iota):
    n = len(pi)
    return [pi[mul[iota[i]][iota[j]]] for i in range(n) for j in range(n)]


def _relabel_map(arr, pi, iota):
    return tuple(pi[arr[iota[i]]] for i in range(len(pi)))


def canonical_form(S: FiniteUnarySemigroup) -> bytes:
    """Least relabelling of mul + plus + minus + star, as bytes.

    Two structures get equal bytes exactly when they are isomorphic.
    """
    n = S.order
    maps = [getattr(S, k) for k in UNARY]
    flags = sum(1 << i for i, a in enumerate(maps) if a is not None)
    best = None
    for iota in permutations(range(n)):
        pi = _inverse(iota)
        key = _relabel_flat(S.mul, pi, iota)
        for arr in maps:
            if arr is not None:
                key.extend(_relabel_map(arr, pi, iota))
        if best is None or key < best:
            best = key
    return bytes([n, flags]) + bytes(best)


def digest(S: FiniteUnarySemigroup) -> str:
    return hashlib.sha256(canonical_form(S)).hexdigest()


def is_isomorphic(S: FiniteUnarySemigroup, T: FiniteUnarySemigroup) -> bool:
    return canonical_form(S) == canonical_form(T)


def from_canonical(data: bytes) -> FiniteUnarySemigroup:
    n, flags = data[0], data[1]
    body = list(data[2:])
    mul = [body[i * n:(i + 1) * n] for i in range(n)]
    pos = n * n
    maps = {}
    for i, key in enumerate(UNARY):
        if flags & (1 << i):
            maps[key] = tuple(body[pos:pos + n])
            pos += n
    return FiniteUnarySemigroup(mul, **maps)


# -- table search --------------------------------------------------------------------

def _stabilisers(n):
    """For each row r, the (pi, iota) pairs with iota fixing {0..r} setwise."""
    out = []
    for r in range(n):
        pairs = []
        for head in permutations(range(r + 1)):
            for tail in permutations(range(r + 1, n)):
                iota = head + tail
                if r == n - 1 or any(iota[i] != i for i in range(n)):
                    pairs.append((_inverse(iota), iota))
        out.append(pairs)
    return out


class _TableSearch:
    def __init__(self, n: int, band: bool, canonical: bool):
        self.n = n
        self.band = band
        self.canonical = canonical
        self.T = [-1] * (n * n)
        if band:
            for x in range(n):
                self.T[x * n + x] = x
        self.stab = _stabilisers(n) if canonical else None

    def _assoc_ok(self, x, y):
        n, T = self.n, self.T
        v = T[x * n + y]
        for z in range(n):
            a, b = T[v * n + z], T[y * n + z]
            if a >= 0 and b >= 0:
                c = T[x * n + b]
                if c >= 0 and a != c:
                    return False
        for a in range(n):
            ax, av = T[a * n + x], T[a * n + v]
            if ax >= 0 and av >= 0:
                lhs = T[ax * n + y]
                if lhs >= 0 and lhs != av:
                    return False
        for a in range(n):
            for b in range(n):
                if T[a * n + b] == x:
                    by = T[b * n + y]
                    if by >= 0:
                        rhs = T[a * n + by]
                        if rhs >= 0 and rhs != v:
                            return False
        for b in range(n):
            xb = T[x * n + b]
            if xb < 0:
                continue
            for c in range(n):
                if T[b * n + c] == y:
                    lhs = T[xb * n + c]
                    if lhs >= 0 and lhs != v:
                        return False
        return True

    def _row_ok(self, r):
        """False if some relabelling fixing {0..r} makes rows 0..r smaller.

        On the last row the automorphisms found on the way are recorded.
        """
        n, T = self.n, self.T
        limit = (r + 1) * n
        auts = []
        for pi, iota in self.stab[r]:
            for k in range(limit):
                v = pi[T[iota[k // n] * n + iota[k % n]]]
                if v != T[k]:
                    if v < T[k]:
                        return False
                    break
            else:
                auts.append(pi)
        if r == n - 1:
            self.auts = auts
        return True

    def _cells(self, start):
        n = self.n
        return [k for k in range(start, n * n) if not (self.band and k // n == k % n)]

    def run(self, start=0) -> Iterator[tuple[tuple[tuple[int, ...], ...], list]]:
        """Yield (table, automorphisms) for every surviving completion."""
        n, T = self.n, self.T
        cells = self._cells(start)
        # rows completed at each position in ``cells``
        row_end = {}
        for idx, k in enumerate(cells):
            row = k // n
            if all(c // n != row for c in cells[idx + 1:]):
                row_end[idx] = row

        def finish_rows(idx):
            r = row_end.get(idx)
            if r is None or not self.canonical:
                return True
            # band diagonal cells are pre-filled; a row may end on a skipped cell
            return self._row_ok(r)

        def leaf():
            table = tuple(tuple(T[i * n + j] for j in range(n)) for i in range(n))
            if not self.canonical:
                self.auts = [list(range(n))]
            return table, list(self.auts)

        def rec(idx):
            if idx == len(cells):
                yield leaf()
                return
            k = cells[idx]
            x, y = divmod(k, n)
            for v in range(n):
                T[k] = v
                if self._assoc_ok(x, y) and finish_rows(idx):
                    yield from rec(idx + 1)
            T[k] = -1

        if not cells:
            # fully pre-filled (order 1 band)
            for r in range(n):
                if self.canonical and not self._row_ok(r):
                    return
            yield leaf()
            return
        # rows already complete before ``start`` were checked by the caller
        yield from rec(0)


def first_rows(n: int, band: bool = False, canonical: bool = True) -> list[tuple[int, ...]]:
    """All admissible first rows; the unit of work splitting."""
    search = _TableSearch(n, band, canonical)
    rows = []
    cells = [k for k in range(n) if not (band and k == 0)]

    def rec(i):
        if i == len(cells):
            if canonical and n > 1 and not search._row_ok(0):
                return
            rows.append(tuple(search.T[:n]))
            return
        k = cells[i]
        for v in range(n):
            search.T[k] = v
            if search._assoc_ok(0, k):
                rec(i + 1)
        search.T[k] = -1

    rec(0)
    return rows


def tables_with_prefix(n, row0, band=False, canonical=True):
    search = _TableSearch(n, band, canonical)
    search.T[:n] = list(row0)
    yield from search.run(n)


def semigroup_tables(n: int, band: bool = False, canonical: bool = True):
    """Yield (table, automorphisms) for all tables of order n."""
    for row in first_rows(n, band, canonical):
        yield from tables_with_prefix(n, row, band, canonical)


# -- unary extensions ------------------------------------------------------------------

def _idempotents(mul):
    return [e for e in range(len(mul)) if mul[e][e] == e]


def _plus_maps(mul):
    n = len(mul)
    idem = _idempotents(mul)
    cands = [[e for e in idem if mul[e][x] == x] for x in range(n)]
    if any(not c for c in cands):
        return
    for plus in product(*cands):
        if not is_band_set(_Tab(mul), set(plus)):
            continue
        ok = True
        for x in range(n):
            for y in range(n):
                if plus[mul[x][y]] != plus[mul[x][plus[y]]]:
                    ok = False
                    break
                if mul[plus[x]][plus[y]] != plus[mul[plus[x]][y]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield plus


def _minus_maps(mul, plus):
    n = len(mul)
    proj = sorted(set(plus))
    cands = [[e for e in proj if mul[x][e] == x] for x in range(n)]
    if any(not c for c in cands):
        return
    for minus in product(*cands):
        if any(minus[p] != p for p in proj):
            continue
        ok = True
        for x in range(n):
            for y in range(n):
                if minus[mul[x][y]] != minus[mul[minus[x]][y]]:
                    ok = False
                    break
                if mul[minus[x]][minus[y]] != minus[mul[x][minus[y]]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield minus


def _star_maps(mul):
    n = len(mul)
    cands = [inverse_candidates(mul, x) for x in range(n)]
    if any(not c for c in cands):
        return
    for star in product(*cands):
        S = FiniteUnarySemigroup(mul, star=star)
        if first_failure(S, STAR_AXIOMS[2:]) is None:
            yield star


class _Tab:
    def __init__(self, mul):
        self.mul = mul


def _extensions(mul, cls):
    """Yield dicts of unary maps turning the table into a member of ``cls``."""
    n = len(mul)
    if cls == "semigroup":
        yield {}
    elif cls == "band":
        ident = tuple(range(n))
        yield {"plus": ident, "minus": ident}
    elif cls == "left-localisable":
        for plus in _plus_maps(mul):
            yield {"plus": plus}
    elif cls in ("localisable", "ehresmann", "restriction"):
        for plus in _plus_maps(mul):
            for minus in _minus_maps(mul, plus):
                yield {"plus": plus, "minus": minus}
    elif cls == "star-localisable":
        for star in _star_maps(mul):
            plus = tuple(mul[x][star[x]] for x in range(n))
            minus = tuple(mul[star[x]][x] for x in range(n))
            yield {"plus": plus, "minus": minus, "star": star}
    else:
        raise ValueError(cls)


def _maps_key(maps, pi=None):
    key = []
    for k in UNARY:
        arr = maps.get(k)
        if arr is not None:
            if pi is None:
                key.extend(arr)
            else:
                iota = _inverse(pi)
                key.extend(_relabel_map(arr, pi, iota))
    return key


def _structures_for_table(mul, auts, cls, isomorphism):
    pred = classify.predicate(cls)
    for maps in _extensions(mul, cls):
        if isomorphism:
            own = _maps_key(maps)
            if any(_maps_key(maps, pi) < own for pi in auts):
                continue
        S = FiniteUnarySemigroup(mul, **maps)
        if pred.test(S):
            yield S


def _work(args):
    n, cls, isomorphism, rows = args
    band = cls == "band"
    out = []
    for row in rows:
        for mul, auts in tables_with_prefix(n, row, band, isomorphism):
            for S in _structures_for_table(mul, auts, cls, isomorphism):
                out.append((canonical_form(S) if isomorphism else _raw_key(S), S))
    return out


def _raw_key(S):
    return bytes(v for row in S.mul for v in row) + bytes(_maps_key(
        {k: getattr(S, k) for k in UNARY if getattr(S, k) is not None}))


def enumerate_structures(spec: SearchSpec) -> list[FiniteUnarySemigroup]:
    """Every structure of the requested class and order, one per isomorphism
    class when ``spec.isomorphism``; ordered by canonical form."""
    if spec.order > spec.bound:
        raise OrderTooLarge(f"order {spec.order} exceeds the bound {spec.bound} for {spec.cls}")
    n = spec.order
    rows = first_rows(n, spec.cls == "band", spec.isomorphism)
    chunks = [rows[i::spec.jobs] for i in range(spec.jobs)]
    tasks = [(n, spec.cls, spec.isomorphism, chunk) for chunk in chunks if chunk]
    if spec.jobs == 1 or len(tasks) <= 1:
        results = [_work(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            results = list(pool.map(_work, tasks))
    merged = sorted((item for part in results for item in part), key=lambda kv: kv[0])
    return [S for _, S in merged]


def enumerate_digests(spec: SearchSpec) -> list[str]:
    return [digest(S) for S in enumerate_structures(spec)]


# -- the naive oracle ------------------------------------------------------------------

NAIVE_NEEDS = {
    "semigroup": (),
    "band": (),
    "localisable": ("plus", "minus"),
    "left-localisable": ("plus",),
    "star-localisable": ("star",),
    "ehresmann": ("plus", "minus"),
    "restriction": ("plus", "minus"),
}


def naive_canonical_forms(n: int, cls: str) -> set[bytes]:
    """Canonical forms of the class by brute force over every table and map.

    No pruning and no shared search code: all n^(n*n) tables, all unary maps,
    then the class predicate and the permutation-minimal canonical form.
    """
    out = set()
    elems = range(n)
    pred = classify.predicate(cls)
    for flat in product(elems, repeat=n * n):
        mul = [flat[i * n:(i + 1) * n] for i in elems]
        if associativity_witness(mul) is not None:
            continue
        if cls == "band" and any(mul[x][x] != x for x in elems):
            continue
        needs = NAIVE_NEEDS[cls]
        for values in product(product(elems, repeat=n), repeat=len(needs)):
            maps = dict(zip(needs, values))
            if cls == "band":
                maps = {"plus": tuple(elems), "minus": tuple(elems)}
            S = FiniteUnarySemigroup(mul, **maps)
            if cls == "star-localisable":
                if not pred.test(S):
                    continue
                S = S.with_maps(
                    plus=tuple(S.mul[x][S.star[x]] for x in elems),
                    minus=tuple(S.mul[S.star[x]][x] for x in elems),
                )
            elif not pred.test(S):
                continue
            out.add(canonical_form(S))
    return out


# -- counterexample search ---------------------------------------------------------------

def _candidate_structures(n: int, has: str, needs: tuple[str, ...]):
    """Structures of order n carrying ``needs``, in a deterministic order."""
    pred = classify.predicate(has)
    if has in CLASSES and has != "band" and set(needs) <= set(_class_maps(has)):
        yield from enumerate_structures(SearchSpec(n, has, max_order=n))
        return
    for mul, auts in semigroup_tables(n):
        cands = []
        for key in needs:
            if key == "plus" and pred.plus_hint is not None:
                cands.append([[e for e in range(n) if pred.plus_hint(mul, x, e)] for x in range(n)])
            else:
                cands.append([list(range(n))] * n)
        for values in product(*(product(*c) for c in cands)):
            yield FiniteUnarySemigroup(mul, **dict(zip(needs, values)))


def _class_maps(cls):
    return {
        "semigroup": (),
        "band": ("plus", "minus"),
        "left-localisable": ("plus",),
        "localisable": ("plus", "minus"),
        "ehresmann": ("plus", "minus"),
        "restriction": ("plus", "minus"),
        "star-localisable": ("plus", "minus", "star"),
    }[cls]


def _signature(has: str, lacks: str) -> tuple[str, ...]:
    p_has, p_lacks = classify.predicate(has), classify.predicate(lacks)
    return tuple(k for k in UNARY if k in p_has.needs or k in p_lacks.needs)


def counterexamples(has: str, lacks: str, order: int) -> Iterator[FiniteUnarySemigroup]:
    """Every structure of the given order (not deduplicated) satisfying
    ``has`` and failing ``lacks``."""
    for S in _candidate_structures(order, has, _signature(has, lacks)):
        if classify.holds(has, S) and not classify.holds(lacks, S):
            yield S


def find_counterexample(has: str, lacks: str, max_order: int = 4):
    """Smallest structure satisfying ``has`` but not ``lacks``.

    Returns ``(structure, None)``, or ``(None, max_order)`` once every order
    up to the bound has been exhausted.
    """
    for n in range(1, max_order + 1):
        for S in counterexamples(has, lacks, n):
            return S, None
    return None, max_order
