from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from support import structures, upto
from transcat import core
from transcat.core import (
    AXIOMS,
    FiniteUnarySemigroup,
    check_axiom,
    local_monoid,
    opposite,
    projections,
    relabel,
)
from transcat.errors import (
    IndexOutOfRange,
    MissingUnary,
    NonAssociative,
    NotAProjection,
    NotLocalisable,
    UnknownAxiomId,
)
from transcat.instances import (
    chain,
    cyclic_group,
    example6,
    left_zero_band,
    reduced_monoid,
    right_zero_band,
    semilattice2,
)


def rewrite_oracle():
    """The semigroup on {e, f} with e e = e, f f = f and f e = 0, by normal forms.

    Words are reduced with the rules above (0 absorbing); the normal forms are
    e, f, ef and 0, and the product is concatenation followed by reduction.
    """
    def reduce(word):
        if "0" in word:
            return "0"
        out = ""
        for ch in word:
            if out and out[-1] == ch:
                continue
            if out and out[-1] == "f" and ch == "e":
                return "0"
            out += ch
        return out

    forms = sorted({reduce(w) for n in range(1, 5) for w in map("".join, product("ef", repeat=n))})
    assert set(forms) == {"e", "f", "ef", "0"}
    order = ["e", "f", "ef", "0"]
    return [[order.index(reduce(x + y)) for y in order] for x in order]


class TestValidation:
    def test_left_zero_table_is_valid(self):
        S = FiniteUnarySemigroup([[0, 0], [1, 1]], names=("a", "b"))
        assert S.order == 2 and S.mul[1][0] == 1

    def test_non_associative_table_gives_least_witness(self):
        mul = [[1, 0], [0, 0]]
        bad = [t for t in product(range(2), repeat=3)
               if mul[mul[t[0]][t[1]]][t[2]] != mul[t[0]][mul[t[1]][t[2]]]]
        with pytest.raises(NonAssociative) as err:
            FiniteUnarySemigroup(mul)
        assert err.value.witness == min(bad) == (0, 0, 1)

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            FiniteUnarySemigroup([[0, 2], [0, 1]])
        with pytest.raises(IndexOutOfRange):
            FiniteUnarySemigroup([[0]], plus=(1,))

    def test_shape_and_names(self):
        with pytest.raises(ValueError):
            FiniteUnarySemigroup([[0, 0]])
        with pytest.raises(ValueError):
            FiniteUnarySemigroup([[0]], plus=(0, 0))
        with pytest.raises(ValueError):
            FiniteUnarySemigroup([[0, 0], [1, 1]], names=("a", "a"))
        with pytest.raises(ValueError):
            FiniteUnarySemigroup([[0]], names=("a b",))

    def test_example_table_matches_rewriting(self):
        S = example6()
        assert [list(r) for r in S.mul] == rewrite_oracle()
        assert S.names == ("e", "f", "a", "0")

    def test_names_do_not_affect_equality(self):
        a = FiniteUnarySemigroup([[0]], names=("x",))
        b = FiniteUnarySemigroup([[0]], names=("y",))
        assert a == b and a.tables_equal(b)


class TestProjections:
    def test_band_projections_are_everything(self):
        assert projections(chain(3)) == (0, 1, 2)

    def test_monoid_has_one_projection(self):
        S = reduced_monoid([[0, 1], [1, 0]])
        assert projections(S) == (0,)

    def test_example(self):
        S = example6()
        assert [S.names[p] for p in projections(S)] == ["e", "f", "0"]

    def test_missing_plus(self):
        with pytest.raises(MissingUnary):
            projections(FiniteUnarySemigroup([[0]]))

    def test_plus_and_minus_images_agree_on_localisable(self):
        for S in upto("localisable", 4):
            assert set(S.minus) == set(projections(S))


class TestAxioms:
    def test_example_fails_left_condition_at_e_f(self):
        S = example6()
        r = check_axiom(S, "4.1c")
        assert not r.holds and r.witness == (0, 1)
        assert r.describe(S.names) == "4.1c at (e,f)"
        assert check_axiom(S, "4.1a").holds
        assert check_axiom(S, "4.1b").holds

    @pytest.mark.parametrize("band", [left_zero_band(3), right_zero_band(2), chain(3)])
    def test_bands_are_localisable(self, band):
        for a in core.LOCALISABLE:
            assert check_axiom(band, a).holds

    def test_restriction_instances_satisfy_b(self):
        for S in upto("restriction", 4):
            assert check_axiom(S, "4.1b").holds and check_axiom(S, "4.1e").holds

    def test_unknown_axiom(self):
        with pytest.raises(UnknownAxiomId):
            check_axiom(chain(2), "9.9")

    def test_missing_unary(self):
        with pytest.raises(MissingUnary):
            check_axiom(FiniteUnarySemigroup([[0]]), "4.1d")

    def test_witness_really_violates(self):
        # every failing report must substitute to unequal sides
        S = FiniteUnarySemigroup([[0, 1], [0, 1]], plus=(1, 0), minus=(1, 0))
        for a in AXIOMS.values():
            if not core.applicable(S, a.id):
                continue
            r = check_axiom(S, a.id)
            if not r.holds:
                assert any(lhs != rhs for lhs, rhs in a.sides(S, *r.witness))

    def test_witness_is_lexicographically_least(self):
        S = example6()
        failing = [
            (x, y) for x, y in product(S.elements, repeat=2)
            if any(l != r for l, r in AXIOMS["4.1c"].sides(S, x, y))
        ]
        assert check_axiom(S, "4.1c").witness == min(failing)

    def test_cp_falls_back_to_minus(self):
        S = FiniteUnarySemigroup([[0, 0], [1, 1]], minus=(0, 1))
        assert not check_axiom(S, "CP").holds


class TestClassPredicates:
    def test_semilattice_is_localisable(self):
        assert core.is_localisable(semilattice2())

    def test_band_ehresmann_iff_commutative(self):
        for B in structures("band", 3):
            commutative = all(B.mul[x][y] == B.mul[y][x] for x, y in product(B.elements, repeat=2))
            assert core.is_ehresmann(B) == commutative

    def test_example_not_left_localisable(self):
        assert not core.is_left_localisable(example6())

    def test_require_localisable_reports_left_failure_first(self):
        with pytest.raises(NotLocalisable) as err:
            core.require_localisable(example6())
        assert err.value.axiom == "4.1c" and err.value.witness == (0, 1)

    def test_reduced_monoid(self):
        assert core.is_reduced_monoid(cyclic_group(3))
        assert not core.is_reduced_monoid(chain(2))


class TestLocalMonoid:
    def test_band(self):
        B = chain(3)
        for e in B.elements:
            M = local_monoid(B, e)
            assert M.order == 1 and M.names == (B.names[e],)

    def test_reduced_monoid_is_its_own(self):
        S = reduced_monoid([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
        assert local_monoid(S, 0).mul == S.mul

    def test_group(self):
        G = cyclic_group(4)
        M = local_monoid(G, 0)
        expected = [x for x in G.elements if G.plus[x] == G.minus[x] == 0]
        assert M.order == len(expected) == 4

    def test_not_a_projection(self):
        with pytest.raises(NotAProjection):
            local_monoid(cyclic_group(3), 1)

    def test_submonoid_on_enumeration(self):
        for S in upto("localisable", 4):
            for e in set(S.plus):
                M = local_monoid(S, e)
                assert core.is_reduced_monoid(M)
                ident = M.plus[0]
                assert all(M.mul[ident][x] == x == M.mul[x][ident] for x in M.elements)


class TestLemmas:
    """The quantified statements live in the lemma battery; this pins the
    counterexample to the unrestricted form of one of them."""

    def test_b_alone_does_not_give_c(self):
        # left-zero band with the two projections swapped: S+ is a band and
        # (4.1b) holds, yet (4.1c) fails because + does not fix S+
        S = FiniteUnarySemigroup([[0, 0], [1, 1]], plus=(1, 0))
        assert core.projections_form_band(S) and check_axiom(S, "4.1b").holds
        assert check_axiom(S, "4.1c").witness == (0, 0)


def random_perm(n):
    return st.permutations(list(range(n)))


class TestSymmetry:
    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_relabelling_preserves_axiom_verdicts(self, data):
        pool = upto("localisable", 3) + list(structures("left-localisable", 3))
        S = data.draw(st.sampled_from(pool))
        perm = data.draw(random_perm(S.order))
        T = relabel(S, perm)
        for a in AXIOMS.values():
            if core.applicable(S, a.id):
                assert check_axiom(S, a.id).holds == check_axiom(T, a.id).holds

    def test_opposite_swaps_sides(self):
        for S in upto("left-localisable", 3):
            T = FiniteUnarySemigroup(S.mul, plus=S.plus)
            assert core.is_right_localisable(opposite(T))

    def test_opposite_is_involutive(self):
        for S in upto("localisable", 3):
            assert opposite(opposite(S)) == S
            assert core.is_localisable(opposite(S))
