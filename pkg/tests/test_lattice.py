import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthospace.core import Subset, closure_mask
from orthospace.errors import NotOrthogonalSet, NotSubalgebra, SizeLimit
from orthospace.lattice import (
    boolean_block,
    build_lattice,
    generated_subalgebra,
    is_boolean,
    is_orthomodular,
)
from orthospace.toolkit.generators import dspace, nset, triangle_with_tails

from .conftest import spaces
from . import oracles


class TestBuild:
    def test_nset_powerset(self):
        assert build_lattice(nset(3)).size == 8

    def test_dspace_two(self):
        assert build_lattice(dspace(2)).size == 6

    def test_five_point_matches_brute_force(self):
        X = triangle_with_tails()
        lattice = build_lattice(X)
        assert set(lattice.elements) == oracles.orthoclosed_sets_brute(X)
        assert lattice.size == 10

    @given(spaces(max_n=5))
    @settings(max_examples=80)
    def test_equals_double_complement_fixed_points(self, X):
        lattice = build_lattice(X)
        assert set(lattice.elements) == oracles.orthoclosed_sets_brute(X)

    def test_size_limit(self):
        with pytest.raises(SizeLimit):
            build_lattice(nset(6), size_limit=10)

    def test_bottom_top(self):
        lattice = build_lattice(triangle_with_tails())
        assert lattice.elements[lattice.bottom] == 0
        assert lattice.elements[lattice.top] == lattice.space.full_mask


class TestOperations:
    def test_join_of_singletons(self):
        X = triangle_with_tails()
        lattice = build_lattice(X)
        b = lattice.index_of(closure_mask(X, 1 << X.index("b")))
        c = lattice.index_of(closure_mask(X, 1 << X.index("c")))
        assert lattice.subset(lattice.join(b, c)).labels() == ("b", "c")

    @given(spaces(max_n=5), st.data())
    def test_meet_ocomp_laws(self, X, data):
        lattice = build_lattice(X)
        a = data.draw(st.integers(0, lattice.size - 1))
        b = data.draw(st.integers(0, lattice.size - 1))
        assert lattice.meet(a, lattice.ocomp(a)) == lattice.bottom
        assert lattice.join(a, lattice.ocomp(a)) == lattice.top
        assert lattice.join(a, lattice.bottom) == a
        assert lattice.ocomp(lattice.ocomp(a)) == a
        # De Morgan
        assert lattice.ocomp(lattice.meet(a, b)) == lattice.join(lattice.ocomp(a), lattice.ocomp(b))
        # complement reverses order
        if lattice.leq(a, b):
            assert lattice.leq(lattice.ocomp(b), lattice.ocomp(a))

    def test_atoms_of_powerset(self):
        lattice = build_lattice(nset(3))
        assert [lattice.elements[a] for a in lattice.atoms()] == [1, 2, 4]


class TestOrthomodularity:
    def test_powerset_is_orthomodular(self):
        assert is_orthomodular(build_lattice(nset(4)))

    def test_dspace_is_orthomodular(self):
        assert is_orthomodular(build_lattice(dspace(3)))

    def test_five_point_is_not(self):
        lattice = build_lattice(triangle_with_tails())
        check = is_orthomodular(lattice)
        assert not check
        a, b = check.witness
        assert lattice.leq(a, b)
        assert lattice.join(a, lattice.meet(b, lattice.ocomp(a))) != b


class TestSubalgebras:
    def test_trivial_generators(self):
        lattice = build_lattice(triangle_with_tails())
        assert generated_subalgebra(lattice, [lattice.bottom]) == {lattice.bottom, lattice.top}

    def test_five_point_singletons(self):
        X = triangle_with_tails()
        lattice = build_lattice(X)
        gens = [lattice.index_of(closure_mask(X, 1 << X.index(l))) for l in "abc"]
        sub = generated_subalgebra(lattice, gens)
        masks = {lattice.elements[i] for i in sub}
        assert X.subset("bc").mask in masks
        assert X.subset("ae").mask in masks

    def test_atoms_generate_powerset(self):
        lattice = build_lattice(nset(3))
        assert generated_subalgebra(lattice, lattice.atoms()) == set(range(8))

    def test_is_boolean_examples(self):
        X = triangle_with_tails()
        lattice = build_lattice(X)
        assert is_boolean(lattice, {lattice.bottom, lattice.top})
        gens = [lattice.index_of(closure_mask(X, 1 << X.index(l))) for l in "abc"]
        assert not is_boolean(lattice, generated_subalgebra(lattice, gens))
        powerset = build_lattice(nset(3))
        assert is_boolean(powerset, range(powerset.size))

    def test_not_subalgebra_rejected(self):
        lattice = build_lattice(nset(3))
        with pytest.raises(NotSubalgebra):
            is_boolean(lattice, {lattice.bottom})

    @given(spaces(max_n=5), st.data())
    @settings(max_examples=50, deadline=None)
    def test_pairwise_law_matches_distributivity(self, X, data):
        lattice = build_lattice(X)
        gens = data.draw(st.sets(st.integers(0, lattice.size - 1), max_size=3))
        sub = generated_subalgebra(lattice, gens)
        assert is_boolean(lattice, sub) == oracles.boolean_by_distributivity(lattice, sub)


class TestBooleanBlock:
    def test_nset_full_block(self):
        X = nset(3)
        block = boolean_block(X, X.full_subset())
        assert len(block.members) == 8

    def test_dspace_pair_block(self):
        X = dspace(2)
        block = boolean_block(X, X.subset(["0_1", "1_1"]))
        assert len(block.members) == 4

    def test_singleton_block(self):
        X = triangle_with_tails()
        block = boolean_block(X, X.subset("e"))
        lattice = block.lattice
        masks = sorted(lattice.elements[i] for i in block.members)
        assert masks == [0, closure_mask(X, 1 << X.index("e"))]

    def test_needs_nonempty_clique(self):
        X = triangle_with_tails()
        with pytest.raises(NotOrthogonalSet):
            boolean_block(X, X.subset())
        with pytest.raises(NotOrthogonalSet):
            boolean_block(X, X.subset("ae"))

    def test_normal_space_blocks_are_boolean_with_singleton_atoms(self):
        # on a normal space the block of a maximal clique is Boolean and its
        # atoms are the singleton closures
        from orthospace.core import maximal_orthogonal_sets

        for X in (nset(4), dspace(3)):
            lattice = build_lattice(X)
            for clique in maximal_orthogonal_sets(X):
                block = boolean_block(X, clique, lattice)
                assert is_boolean(lattice, block.members)
                nonbottom = [i for i in block.members if i != lattice.bottom]
                atoms = [i for i in nonbottom
                         if not any(j != i and lattice.leq(j, i) for j in nonbottom)]
                singles = {lattice.index_of(closure_mask(X, 1 << e)) for e in clique}
                assert set(atoms) == singles
