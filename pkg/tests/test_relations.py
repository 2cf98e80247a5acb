from __future__ import annotations

from itertools import product

import pytest
from sympy.utilities.iterables import multiset_partitions

from support import structures, upto
from transcat.errors import (
    NotACrossSection,
    NotIdempotents,
    NotLocalisable,
    OrderTooLarge,
)
from transcat.instances import (
    as_band,
    chain,
    cyclic_group,
    example6,
    left_zero_band,
    reduced_monoid,
    right_zero_band,
    semilattice2,
)
from transcat.relations import (
    BinaryRelationOnElements,
    congruences,
    d_modification,
    greens,
    is_compatible,
    is_fundamental,
    is_generalised_D,
    is_projection_separating,
    is_weakly_left_E_abundant,
    mitsch_order,
    mu_is_congruence,
    mu_relation,
    natural_orders,
    projection_order,
    set_partitions,
    swung_leq_R,
    swung_R,
)

E, F, A, Z = range(4)


def monoid3():
    # {1, a, 0} with a a = 0, regarded as a reduced monoid
    return reduced_monoid([[0, 1, 2], [1, 1, 1], [2, 1, 2]])


def d3(S):
    m, p = S.mul, S.plus
    return all(
        m[p[m[x][y]]][p[x]] == p[m[x][y]] == m[p[x]][p[m[x][y]]]
        for x, y in product(S.elements, repeat=2)
    )


class TestRelationBasics:
    def test_kinds_are_checked(self):
        with pytest.raises(ValueError):
            BinaryRelationOnElements(((True, True), (False, False)), "equivalence")

    def test_blocks(self):
        r = BinaryRelationOnElements.from_blocks(3, (0, 1, 0))
        assert r.classes() == [(0, 2), (1,)] and r.pairs() == [(0, 0), (0, 2), (1, 1), (2, 0), (2, 2)]

    def test_set_partitions_are_bell_many(self):
        assert [sum(1 for _ in set_partitions(n)) for n in range(6)] == [1, 1, 2, 5, 15, 52]


class TestSwung:
    def test_example_classes(self):
        S = example6()
        assert swung_R(S).classes() == [(E, A), (F,), (Z,)]
        assert all(swung_R(S).matrix[x][S.plus[x]] for x in S.elements)

    def test_band_form(self):
        for B in upto("band", 3):
            rel = swung_leq_R(B)
            for s, t in product(B.elements, repeat=2):
                assert rel.matrix[s][t] == (B.mul[t][s] == s)

    def test_reduced_monoid_is_total(self):
        assert swung_leq_R(monoid3()).is_universal()

    def test_preorder(self):
        for S in upto("left-localisable", 3):
            rel = swung_leq_R(S)
            assert rel.is_reflexive() and rel.is_transitive()

    def test_left_congruence(self):
        for S in upto("left-localisable", 4):
            R = swung_R(S)
            for (s, t), u in product(R.pairs(), S.elements):
                assert R.matrix[S.mul[u][s]][S.mul[u][t]]


class TestAbundance:
    def test_example_with_three_idempotents(self):
        assert is_weakly_left_E_abundant(example6(), {E, F, Z})

    def test_example_with_zero_only(self):
        assert not is_weakly_left_E_abundant(example6(), {Z})

    def test_rejects_non_idempotents(self):
        with pytest.raises(NotIdempotents):
            is_weakly_left_E_abundant(example6(), {A})

    def test_left_localisable_with_projections(self):
        for S in upto("left-localisable", 4):
            assert is_weakly_left_E_abundant(S, set(S.plus))

    def test_right_zero_band_is_not_generalised_d(self):
        # x y = y makes every element swung-related to every other
        report = is_generalised_D(right_zero_band(2), {0, 1})
        assert not report and report.witness == (0, 1)

    def test_left_zero_band_classes_are_singletons(self):
        assert is_generalised_D(left_zero_band(2), {0, 1})

    def test_reduced_monoid(self):
        M = monoid3()
        assert is_generalised_D(M, {M.plus[0]})

    def test_left_regular_band_of_projections(self):
        for S in upto("left-localisable", 4):
            P = set(S.plus)
            if all(S.mul[S.mul[p][q]][p] == S.mul[p][q] for p in P for q in P):
                assert is_generalised_D(S, P)

    def test_generalised_d_iff_d3(self):
        for S in upto("left-localisable", 4):
            assert bool(is_generalised_D(S, set(S.plus))) == d3(S)


class TestModification:
    def test_projections_already_a_cross_section(self):
        S = left_zero_band(2)
        assert d_modification(S, {0, 1}).plus == S.plus

    def test_single_class(self):
        T = d_modification(right_zero_band(2), {0})
        assert T.plus == (0, 0) and T.minus is None
        assert is_generalised_D(T, {0})

    def test_reduced_monoid(self):
        M = monoid3()
        assert d_modification(M, {M.plus[0]}).plus == M.plus

    def test_not_a_cross_section(self):
        with pytest.raises(NotACrossSection):
            d_modification(right_zero_band(2), {0, 1})
        with pytest.raises(NotACrossSection):
            d_modification(right_zero_band(2), set())

    def test_requires_left_localisable(self):
        with pytest.raises(NotLocalisable):
            d_modification(example6(), {E, F, Z})

    def test_result_is_generalised_d_everywhere(self):
        for S in upto("left-localisable", 4):
            R = swung_R(S)
            X = {min(c) for c in R.classes() if set(c) & set(S.plus)}
            X = {next(p for p in sorted(set(S.plus)) if R.matrix[p][x]) for x in X}
            T = d_modification(S, X)
            assert is_generalised_D(T, X)
            assert all(T.mul[T.plus[s]][s] == s for s in S.elements)


class TestOrders:
    def test_reduced_monoid_is_discrete(self):
        assert projection_order(monoid3()).is_identity()

    def test_band(self):
        for B in upto("band", 3):
            po = projection_order(B)
            for s, t in product(B.elements, repeat=2):
                assert po.matrix[s][t] == (s == B.mul[s][t] == B.mul[t][s])

    def test_semilattice(self):
        # with x+ = x- = x the order is 0 below 1; with x+ = x- = 1 it is trivial
        po, _ = natural_orders(chain(2))
        assert po.matrix[0][1] and not po.matrix[1][0]
        po, mo = natural_orders(semilattice2())
        assert po.is_identity() and mo.matrix[0][1]

    def test_partial_orders(self):
        for S in upto("localisable", 4):
            po, mo = natural_orders(S)
            assert po.is_antisymmetric() and po.is_transitive() and po <= mo

    def test_mitsch_on_group_is_trivial(self):
        assert mitsch_order(cyclic_group(3)).is_identity()


class TestMu:
    def test_band(self):
        for B in upto("band", 3):
            assert mu_relation(B).is_identity()
            assert is_fundamental(B)

    def test_reduced_monoid_universal(self):
        M = monoid3()
        assert mu_relation(M).is_universal() and not is_fundamental(M)
        assert not is_fundamental(semilattice2())

    def test_projection_separating(self):
        for S in upto("localisable", 4):
            assert is_projection_separating(S, mu_relation(S))

    def test_congruence_is_reported_per_instance(self):
        # observed, not claimed in general: mu is a pm-congruence on every
        # localisable semigroup of order at most 4
        assert all(mu_is_congruence(S) for S in upto("localisable", 4))

    def test_mu_contains_separating_congruences(self):
        for S in upto("localisable", 4):
            mu = mu_relation(S)
            for theta in congruences(S, "projection-separating-pm"):
                assert theta <= mu


def oracle_congruences(S, pm):
    """Filter every set partition, without any pruning."""
    n = S.order
    found = []
    for blocks in multiset_partitions(list(range(n))):
        labels = [0] * n
        for i, block in enumerate(blocks):
            for x in block:
                labels[x] = i
        rel = BinaryRelationOnElements.from_blocks(n, labels)
        if is_compatible(S, rel, pm):
            found.append(rel.matrix)
    return sorted(found)


class TestCongruences:
    @pytest.mark.parametrize("tag", ["semigroup", "pm"])
    def test_agree_with_unpruned_filter(self, tag):
        for S in upto("localisable", 4):
            got = sorted(r.matrix for r in congruences(S, tag))
            assert got == oracle_congruences(S, tag == "pm")

    def test_bands_of_order_three(self):
        counts = [len(congruences(B, "±")) for B in structures("band", 3)]
        assert counts == [len(oracle_congruences(B, True)) for B in structures("band", 3)]
        assert all(c >= 2 for c in counts)

    def test_identity_always_present(self):
        for S in upto("localisable", 3):
            assert any(r.is_identity() for r in congruences(S, "pm"))

    def test_separating_iff_inside_mu(self):
        for S in upto("localisable", 4):
            mu = mu_relation(S)
            sep = {r.matrix for r in congruences(S, "projection-separating-±")}
            for theta in congruences(S, "pm"):
                assert (theta.matrix in sep) == (theta <= mu)

    def test_bound(self):
        with pytest.raises(OrderTooLarge):
            congruences(chain(6), "pm")
        assert len(congruences(chain(6), "semigroup", max_order=6)) > 0

    def test_unknown_tag(self):
        with pytest.raises(ValueError):
            congruences(chain(2), "ring")


class TestGreens:
    def test_group_is_one_class(self):
        g = greens(cyclic_group(3))
        assert all(g[k].is_universal() for k in "RLHDJ")

    def test_left_zero_band(self):
        g = greens(left_zero_band(2))
        assert g["R"].is_identity() and g["L"].is_universal()

    def test_chain_is_trivial(self):
        assert all(r.is_identity() for r in greens(chain(3)).values())

    def test_brute_force(self):
        # oracle: s R t iff s = t or both lie in each other's right ideal s S
        for S in structures("semigroup", 3):
            m = S.mul
            R = greens(S)["R"]
            for s, t in product(S.elements, repeat=2):
                below = lambda a, b: a == b or any(m[b][u] == a for u in S.elements)
                assert R.matrix[s][t] == (below(s, t) and below(t, s))


class TestFundamentalExamples:
    def test_left_zero_band(self):
        assert is_fundamental(left_zero_band(3))

    def test_group(self):
        assert not is_fundamental(cyclic_group(2))

    def test_trivial(self):
        assert is_fundamental(as_band([[0]]))

    def test_smallest_fundamental_non_bands(self):
        # none below order 4, three of order 4 (frozen from the enumeration)
        counts = [sum(1 for S in structures("localisable", n)
                      if is_fundamental(S) and any(S.mul[x][x] != x for x in S.elements))
                  for n in range(1, 5)]
        assert counts == [0, 0, 0, 3]

    def test_brandt_semigroup(self):
        from transcat.corpus import path
        from transcat.starloc import derive_projections_from_star
        from transcat.textio import parse_file

        B = derive_projections_from_star(parse_file(path("brandt2.uas")).payload)
        assert is_fundamental(B)
