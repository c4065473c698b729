import pytest
from hypothesis import given, settings

from orthospace.classify import (
    classify,
    is_dacey,
    is_linear,
    is_normal_fast,
    is_normal_oracle,
    subspace,
)
from orthospace.core import Subset, closure_mask, is_irreducible, is_orthoclosed, is_strongly_irredundant
from orthospace.errors import EmptySubset, NotOrthoclosed
from orthospace.lattice import build_lattice, is_orthomodular
from orthospace.toolkit.generators import dspace, nset, triad_square, triangle_with_tails, twin_squares

from .conftest import spaces
from . import oracles


class TestNormal:
    def test_five_point_witness(self):
        check = is_normal_fast(triangle_with_tails())
        assert not check
        clique, split, f, g = check.witness
        assert clique == ("a", "b", "c")
        assert split == (("a",), ("b", "c"))
        assert (f, g) == ("d", "e")

    def test_nset_normal(self):
        for n in (1, 2, 5):
            assert is_normal_fast(nset(n))

    def test_rank_one_normal(self):
        from orthospace.core import new_space

        assert is_normal_fast(new_space(3))

    def test_oracle_on_examples(self):
        assert not is_normal_oracle(triangle_with_tails())
        assert is_normal_oracle(dspace(3))
        assert is_normal_oracle(nset(4))

    @given(spaces(max_n=5))
    @settings(max_examples=80, deadline=None)
    def test_fast_equals_oracle(self, X):
        assert bool(is_normal_fast(X)) == is_normal_oracle(X)


class TestDacey:
    def test_five_point_witness(self):
        check = is_dacey(triangle_with_tails())
        assert not check
        closed, clique = check.witness
        assert closed == ("b", "c", "d")
        assert clique == ("b", "c")

    def test_nset_dacey(self):
        assert is_dacey(nset(4))

    def test_projective_fragment_dacey(self):
        from orthospace.toolkit.generators import rational_fragment9

        assert is_dacey(rational_fragment9())

    def test_bigger_fragment_is_not_dacey(self):
        # the 13-point family lacks the completing rays its orthoclosed
        # sets would need
        from orthospace.toolkit.generators import rational_fragment

        check = is_dacey(rational_fragment())
        assert not check and check.witness is not None

    @given(spaces(max_n=5))
    @settings(max_examples=80, deadline=None)
    def test_agrees_with_orthomodularity(self, X):
        lattice = build_lattice(X)
        assert bool(is_dacey(X, lattice)) == bool(is_orthomodular(lattice))


class TestLinear:
    def test_dspace_linear(self):
        for n in (2, 3, 4):
            assert is_linear(dspace(n))

    def test_two_element_not_linear(self):
        assert not is_linear(nset(2))

    def test_five_point_not_linear(self):
        check = is_linear(triangle_with_tails())
        assert not check
        e, f = check.witness
        X = triangle_with_tails()
        ei, fi = X.index(e), X.index(f)
        # no g anywhere satisfies the two conditions for the witness pair
        target = X.adj[ei] & X.adj[fi]
        f_orth = bool(X.adj[ei] >> fi & 1)
        for g in range(X.n):
            assert not ((X.adj[ei] & X.adj[g]) == target
                        and bool(X.adj[ei] >> g & 1) != f_orth)


class TestSubspace:
    def test_five_point_bc(self):
        X = triangle_with_tails()
        sub = subspace(X, X.subset("bc"))
        assert sub.labels == ("b", "c")
        assert sub.is_orthogonal(0, 1)

    def test_whole_space(self):
        X = triangle_with_tails()
        assert subspace(X, X.full_subset()) == X

    def test_edgeless_orthoclosed_pair(self):
        X = triad_square()
        A = X.subset("ae")
        assert is_orthoclosed(X, A)
        sub = subspace(X, A)
        assert sub.edges() == []

    def test_rejects_non_orthoclosed(self):
        X = triangle_with_tails()
        with pytest.raises(NotOrthoclosed):
            subspace(X, X.subset("d"))

    def test_rejects_empty(self):
        X = triangle_with_tails()
        with pytest.raises(EmptySubset):
            subspace(X, X.subset())


class TestClassify:
    def test_dspace(self):
        report = classify(dspace(2))
        assert report.normal and report.dacey and report.linear
        assert report.lattice_size == 6
        assert report.witnesses == {}

    def test_five_point(self):
        report = classify(triangle_with_tails())
        assert not report.normal and not report.dacey and not report.linear
        assert report.irreducible and report.irredundant
        assert not report.strongly_irredundant
        assert set(report.witnesses) == {"normal", "dacey", "linear", "strongly_irredundant"}

    def test_nset(self):
        report = classify(nset(3))
        assert report.normal and report.dacey and not report.linear
        assert not report.irreducible

    def test_special_fixtures(self):
        sq = classify(triad_square())
        assert sq.normal and not sq.dacey
        tw = classify(twin_squares())
        assert tw.normal and not tw.dacey

    @given(spaces(max_n=5))
    @settings(max_examples=60, deadline=None)
    def test_no_internal_inconsistency(self, X):
        classify(X)  # raises InternalInconsistency on any broken implication


class TestLinearityCharacterisation:
    """Linearity implies irreducible + strongly irredundant + Dacey; the
    converse fails, and the smallest counterexamples are pinned here."""

    @given(spaces(max_n=6))
    @settings(max_examples=80, deadline=None)
    def test_forward_implication(self, X):
        if is_linear(X):
            assert is_irreducible(X)
            assert is_strongly_irredundant(X)
            assert is_dacey(X)

    def test_triangle_plus_pair_refutes_converse(self):
        from orthospace.toolkit.generators import triangle_plus_pair

        X = triangle_plus_pair()
        assert is_irreducible(X) and is_strongly_irredundant(X) and is_dacey(X)
        assert not is_linear(X)

    def test_nine_point_fragment_refutes_converse_connectedly(self):
        from orthospace.toolkit.generators import rational_fragment9

        X = rational_fragment9()
        assert is_irreducible(X) and is_strongly_irredundant(X) and is_dacey(X)
        assert not is_linear(X)
        # its lattice is orthomodular yet non-modular: a pentagon witness
        lattice = build_lattice(X)
        a = lattice.index_of(X.subset(["(1:0:0)"]).mask)
        c = lattice.index_of(X.subset(["(1:0:0)", "(0:1:1)"]).mask)
        b = lattice.index_of(X.subset(["(0:0:1)", "(1:1:0)"]).mask)
        assert lattice.leq(a, c)
        assert lattice.join(a, lattice.meet(b, c)) != lattice.meet(lattice.join(a, b), c)


class TestTheorems:
    @given(spaces(max_n=5))
    @settings(max_examples=50, deadline=None)
    def test_linear_subspaces_stay_linear(self, X):
        # hereditary linearity over orthoclosed subsets
        if not is_linear(X):
            return
        for mask in build_lattice(X).elements:
            if mask:
                assert is_linear(subspace(X, Subset(X, mask)))

    @given(spaces(max_n=5))
    @settings(max_examples=50, deadline=None)
    def test_full_closure_subspaces_of_normal_are_normal(self, X):
        # if every maximal clique D of orthoclosed A has D'' = A in a normal
        # space, the subspace on A is normal
        from orthospace.classify import _maximal_cliques_within

        if not is_normal_fast(X):
            return
        for mask in build_lattice(X).elements:
            if not mask:
                continue
            if all(closure_mask(X, d) == mask for d in _maximal_cliques_within(X, mask)):
                assert is_normal_fast(subspace(X, Subset(X, mask)))
