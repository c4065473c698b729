import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthospace.core import (
    OrthoSpace,
    Subset,
    complement_mask,
    closure_mask,
    extend_to_maximal,
    is_clique_mask,
    is_irreducible,
    is_irredundant,
    is_strongly_irredundant,
    maximal_orthogonal_sets,
    new_space,
    ortho_closure,
    ortho_complement,
    rank,
    strong_irredundancy_witness,
)
from orthospace.errors import DuplicateLabel, NotOrthogonalSet, SelfLoop, UnknownLabel
from orthospace.toolkit.generators import dspace, nset, triangle_with_tails

from .conftest import spaces
from . import oracles


def five_point():
    return triangle_with_tails()


class TestConstruction:
    def test_labels_and_edges(self):
        X = five_point()
        assert X.n == 5
        assert X.labels == ("a", "b", "c", "d", "e")
        assert len(X.edges()) == 6

    def test_single_point(self):
        X = new_space(1)
        assert X.n == 1 and X.edges() == []

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoop):
            new_space(2, [("a", "a")])

    def test_duplicate_label_rejected(self):
        with pytest.raises(DuplicateLabel):
            new_space(2, [], labels=["a", "a"])

    def test_unknown_label_rejected(self):
        with pytest.raises(UnknownLabel):
            new_space(2, [("a", "z")])

    def test_edges_symmetrised(self):
        X = new_space(3, [("a", "b")])
        assert X.is_orthogonal(0, 1) and X.is_orthogonal(1, 0)


class TestComplement:
    def test_five_point_bc(self):
        X = five_point()
        assert ortho_complement(X, X.subset("bc")).labels() == ("a", "e")

    def test_empty_set_gives_everything(self):
        X = five_point()
        assert ortho_complement(X, X.subset()).mask == X.full_mask

    def test_nset_singleton(self):
        X = nset(3)
        assert ortho_complement(X, X.subset([0])).members() == (1, 2)

    @given(spaces(), st.data())
    def test_matches_brute_force(self, X, data):
        mask = data.draw(st.integers(0, X.full_mask))
        assert complement_mask(X, mask) == oracles.complement_brute(X, mask)

    @given(spaces(), st.data())
    def test_antitone(self, X, data):
        a = data.draw(st.integers(0, X.full_mask))
        b = data.draw(st.integers(0, X.full_mask))
        small, big = a & b, a | b
        assert complement_mask(X, big) & ~complement_mask(X, small) == 0

    @given(spaces(), st.data())
    def test_triple_complement(self, X, data):
        mask = data.draw(st.integers(0, X.full_mask))
        c = complement_mask(X, mask)
        assert complement_mask(X, closure_mask(X, mask)) == c


class TestClosure:
    def test_five_point_values(self):
        X = five_point()
        assert ortho_closure(X, X.subset("bc")).labels() == ("b", "c")
        assert ortho_closure(X, X.subset("e")).labels() == ("a", "e")

    def test_full_set_fixed(self):
        X = five_point()
        assert ortho_closure(X, X.full_subset()).mask == X.full_mask

    @given(spaces(), st.data())
    def test_closure_operator_laws(self, X, data):
        a = data.draw(st.integers(0, X.full_mask))
        b = data.draw(st.integers(0, X.full_mask))
        ca = closure_mask(X, a)
        assert a & ~ca == 0  # extensive
        assert closure_mask(X, ca) == ca  # idempotent
        if a & ~b == 0:  # monotone
            assert ca & ~closure_mask(X, b) == 0


class TestCliques:
    def test_five_point_maximal(self):
        X = five_point()
        got = [s.labels() for s in maximal_orthogonal_sets(X)]
        assert got == [("a", "b", "c"), ("a", "d"), ("b", "c", "e")]

    def test_nset_single_clique(self):
        X = nset(4)
        assert [s.mask for s in maximal_orthogonal_sets(X)] == [X.full_mask]

    def test_edgeless_singletons(self):
        X = new_space(3)
        assert [s.members() for s in maximal_orthogonal_sets(X)] == [(0,), (1,), (2,)]

    @given(spaces())
    @settings(max_examples=60)
    def test_matches_brute_force(self, X):
        got = {s.mask for s in maximal_orthogonal_sets(X)}
        assert got == oracles.maximal_cliques_brute(X)

    @given(spaces())
    @settings(max_examples=60)
    def test_each_result_maximal(self, X):
        for s in maximal_orthogonal_sets(X):
            assert is_clique_mask(X, s.mask)
            for x in range(X.n):
                if not s.mask >> x & 1:
                    assert not is_clique_mask(X, s.mask | 1 << x)


class TestRank:
    def test_values(self):
        assert rank(nset(5)) == 5
        assert rank(five_point()) == 3
        assert rank(new_space(3)) == 1

    @given(spaces())
    def test_equals_max_clique_size(self, X):
        assert rank(X) == max(s.size for s in maximal_orthogonal_sets(X))


class TestExtendToMaximal:
    def test_greedy_from_a(self):
        X = five_point()
        got = extend_to_maximal(X, X.subset("a"))
        assert got.labels() == ("a", "b", "c")

    def test_common_neighbour_forced(self):
        X = five_point()
        assert extend_to_maximal(X, X.subset("be")).labels() == ("b", "c", "e")

    def test_already_maximal(self):
        X = five_point()
        assert extend_to_maximal(X, X.subset("ad")).labels() == ("a", "d")

    def test_non_clique_rejected(self):
        X = five_point()
        with pytest.raises(NotOrthogonalSet):
            extend_to_maximal(X, X.subset("ae"))

    @given(spaces(), st.data())
    @settings(max_examples=60)
    def test_result_contains_and_is_maximal(self, X, data):
        cliques = [s.mask for s in maximal_orthogonal_sets(X)]
        base = data.draw(st.sampled_from(cliques))
        sub = data.draw(st.integers(0, base)) & base
        got = extend_to_maximal(X, Subset(X, sub))
        assert sub & ~got.mask == 0
        assert got.mask in set(cliques)


class TestPredicates:
    def test_five_point(self):
        X = five_point()
        assert is_irredundant(X)
        assert not is_strongly_irredundant(X)
        e, f = strong_irredundancy_witness(X)
        assert X.adj[e] & ~X.adj[f] == 0 and e != f
        assert is_irreducible(X)

    def test_dspace(self):
        for n in (2, 3, 4):
            X = dspace(n)
            assert is_strongly_irredundant(X)
            # oracle: no bipartition with all cross pairs orthogonal
            found = False
            for part in range(1, X.full_mask):
                rest = X.full_mask & ~part
                if rest and all(
                    X.adj[i] >> j & 1
                    for i in oracles.members(part)
                    for j in oracles.members(rest)
                ):
                    found = True
            assert is_irreducible(X) == (not found)
            assert is_irreducible(X)

    def test_single_point_all_true(self):
        X = new_space(1)
        assert is_irredundant(X) and is_strongly_irredundant(X) and is_irreducible(X)

    def test_nset_reducible(self):
        assert not is_irreducible(nset(2))

    @given(spaces(max_n=5))
    @settings(max_examples=60)
    def test_irreducible_against_partition_scan(self, X):
        found = None
        for part in range(1, X.full_mask):
            rest = X.full_mask & ~part
            if rest and all(
                X.adj[i] >> j & 1
                for i in oracles.members(part)
                for j in oracles.members(rest)
            ):
                found = part
                break
        assert is_irreducible(X) == (found is None)
