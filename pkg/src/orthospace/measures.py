"""Two-valued measures on finite orthogonality spaces.

At point level a two-valued measure assigns 0/1 so that every maximal
orthogonal set carries exactly one 1.  The search is complete backtracking
with unit propagation, so an empty result is a proof that no measure exists.
Lifting a point measure to an additive lattice state is a separate step and
is sound only on Dacey spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import OrthoSpace, Subset, _bits, maximal_orthogonal_sets
from .errors import NotDacey
from .lattice import OrthoLattice, build_lattice
from .classify import _maximal_cliques_within, is_dacey


@dataclass(frozen=True)
class TwoValuedMeasure:
    """A 0/1 assignment with exactly one 1 per maximal orthogonal set."""

    space: OrthoSpace
    assignment: tuple[int, ...]

    def ones(self) -> tuple[str, ...]:
        return tuple(lab for lab, v in zip(self.space.labels, self.assignment) if v)

    def to_json(self) -> list[int]:
        return list(self.assignment)


def satisfies(space: OrthoSpace, assignment: Sequence[int]) -> bool:
    for clique in maximal_orthogonal_sets(space):
        if sum(assignment[i] for i in _bits(clique.mask)) != 1:
            return False
    return True


def _search(space: OrthoSpace) -> Iterator[tuple[int, ...]]:
    """Complete DFS over assignments; propagates within each maximal clique
    (a placed 1 zeroes the rest, all-but-one 0 forces the last to 1)."""
    cliques = [list(_bits(c.mask)) for c in maximal_orthogonal_sets(space)]
    n = space.n
    member_of: list[list[int]] = [[] for _ in range(n)]
    for ci, members in enumerate(cliques):
        for e in members:
            member_of[e].append(ci)
    # most-constrained first: elements in many cliques propagate the most
    order = sorted(range(n), key=lambda e: (-len(member_of[e]), e))

    values: list[int] = [-1] * n

    def propagate(trail: list[int], queue: list[int]) -> bool:
        while queue:
            e = queue.pop()
            for ci in member_of[e]:
                members = cliques[ci]
                ones = sum(1 for x in members if values[x] == 1)
                if ones > 1:
                    return False
                unset = [x for x in members if values[x] == -1]
                if ones == 1:
                    for x in unset:
                        values[x] = 0
                        trail.append(x)
                        queue.append(x)
                elif not unset:
                    return False
                elif len(unset) == 1 and ones == 0:
                    x = unset[0]
                    values[x] = 1
                    trail.append(x)
                    queue.append(x)
        return True

    def undo(trail: list[int]) -> None:
        for x in trail:
            values[x] = -1

    def walk(k: int) -> Iterator[tuple[int, ...]]:
        while k < n and values[order[k]] != -1:
            k += 1
        if k == n:
            yield tuple(values)
            return
        e = order[k]
        for v in (1, 0):
            trail = [e]
            values[e] = v
            if propagate(trail, [e]):
                yield from walk(k + 1)
            undo(trail)

    yield from walk(0)


def iter_measures(space: OrthoSpace) -> Iterator[TwoValuedMeasure]:
    for values in _search(space):
        m = TwoValuedMeasure(space, values)
        assert satisfies(space, values), "search produced an invalid assignment"
        yield m


def find_two_valued_measure(space: OrthoSpace) -> TwoValuedMeasure | None:
    """A satisfying assignment, or None as an exhaustive unsatisfiability
    proof."""
    return next(iter_measures(space), None)


def count_measures(space: OrthoSpace, cap: int | None = None) -> int:
    """Number of distinct two-valued measures, stopping at ``cap``."""
    count = 0
    for _ in _search(space):
        count += 1
        if cap is not None and count >= cap:
            break
    return count


@dataclass(frozen=True)
class LatticeState:
    """A 0/1 valuation of the ortholattice: additive on orthogonal pairs,
    with value 1 on the top element."""

    lattice: OrthoLattice
    values: tuple[int, ...]


@dataclass(frozen=True)
class LiftOutcome:
    state: LatticeState | None
    witness: object = None

    def __bool__(self):
        return self.state is not None


def lift_to_lattice_state(space: OrthoSpace, measure: TwoValuedMeasure,
                          lattice: OrthoLattice | None = None) -> LiftOutcome:
    """Extend a point measure to the lattice by evaluating maximal cliques.

    mu(A) is the common value of max(m over D) for the maximal orthogonal
    subsets D of A; inconsistent elements produce a witness instead.  The
    space must be Dacey, and the resulting state is verified to be additive
    with mu(X) = 1.
    """
    if lattice is None:
        lattice = build_lattice(space)
    if not is_dacey(space, lattice):
        raise NotDacey("the lattice state lift needs an orthomodular lattice")
    values = []
    for mask in lattice.elements:
        if mask == 0:
            values.append(0)
            continue
        per_clique = {
            max(measure.assignment[e] for e in _bits(d))
            for d in _maximal_cliques_within(space, mask)
        }
        if len(per_clique) != 1:
            return LiftOutcome(None, Subset(space, mask).labels())
        values.append(per_clique.pop())
    state = LatticeState(lattice, tuple(values))
    assert values[lattice.top] == 1, "total mass must be 1"
    for a in range(lattice.size):
        for b in range(lattice.size):
            if lattice.orthogonal(a, b):
                assert values[lattice.join(a, b)] == values[a] + values[b], \
                    "additivity failed on an orthogonal pair"
    return LiftOutcome(state)
