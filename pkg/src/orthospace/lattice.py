"""The complete ortholattice of orthoclosed subsets of a finite space.

Every orthoclosed set is an intersection of singleton complements, so the
lattice is materialised by closing {X} under intersection with the adjacency
masks.  This reaches exactly { A'' : A subset of X } without touching all 2^n
subsets; the brute-force route is kept as a test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .core import OrthoSpace, Subset, complement_mask, closure_mask, is_clique_mask, _bits
from .errors import NotOrthogonalSet, NotSubalgebra, SizeLimit

DEFAULT_SIZE_LIMIT = 100_000


@dataclass
class OrthoLattice:
    """C(X, _|_) with meet, join and orthocomplement tables.

    Elements are masks sorted ascending, so indices are stable across runs.
    Bottom is the empty set, top is the whole space.
    """

    space: OrthoSpace
    elements: tuple[int, ...]
    _index: dict[int, int] = field(repr=False)
    ocomp_table: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.elements) - 1

    def index_of(self, mask: int) -> int:
        try:
            return self._index[mask]
        except KeyError:
            raise KeyError(f"mask {mask:#x} is not orthoclosed in this space") from None

    def subset(self, a: int) -> Subset:
        return Subset(self.space, self.elements[a])

    def leq(self, a: int, b: int) -> bool:
        return self.elements[a] & ~self.elements[b] == 0

    def meet(self, a: int, b: int) -> int:
        return self._index[self.elements[a] & self.elements[b]]

    def join(self, a: int, b: int) -> int:
        return self._index[closure_mask(self.space, self.elements[a] | self.elements[b])]

    def ocomp(self, a: int) -> int:
        return self.ocomp_table[a]

    def orthogonal(self, a: int, b: int) -> bool:
        """Lattice orthogonality: b lies below the orthocomplement of a."""
        return self.leq(b, self.ocomp_table[a])

    def atoms(self) -> tuple[int, ...]:
        """Indices of the minimal non-bottom elements."""
        out = []
        for a in range(1, self.size):
            ma = self.elements[a]
            if not any(0 < self.elements[b] < ma and self.elements[b] & ~ma == 0
                       for b in range(1, self.size)):
                out.append(a)
        return tuple(out)

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs (a, b) with a covered by b, for Hasse diagrams."""
        out = []
        for a in range(self.size):
            for b in range(self.size):
                if a != b and self.leq(a, b):
                    if not any(c != a and c != b and self.leq(a, c) and self.leq(c, b)
                               for c in range(self.size)):
                        out.append((a, b))
        return out


def build_lattice(space: OrthoSpace, size_limit: int = DEFAULT_SIZE_LIMIT) -> OrthoLattice:
    """Materialise C(X, _|_); raises SizeLimit beyond ``size_limit`` elements."""
    full = space.full_mask
    seen = {full}
    frontier = [full]
    while frontier:
        nxt = []
        for m in frontier:
            for a in space.adj:
                t = m & a
                if t not in seen:
                    seen.add(t)
                    if len(seen) > size_limit:
                        raise SizeLimit(f"lattice exceeds {size_limit} elements")
                    nxt.append(t)
        frontier = nxt
    elements = tuple(sorted(seen))
    index = {m: i for i, m in enumerate(elements)}
    ocomp = tuple(index[complement_mask(space, m)] for m in elements)
    return OrthoLattice(space, elements, index, ocomp)


def is_orthomodular(lattice: OrthoLattice):
    """Check b = (a or (b and a')) for all a <= b; returns ok plus witness.

    The witness, when present, is the first violating pair (a, b) in index
    order.
    """
    from .classify import Check  # local import to avoid a cycle

    for a in range(lattice.size):
        ca = lattice.ocomp_table[a]
        for b in range(lattice.size):
            if a != b and lattice.leq(a, b):
                if lattice.join(a, lattice.meet(b, ca)) != b:
                    return Check(False, (a, b))
    return Check(True)


def generated_subalgebra(lattice: OrthoLattice, gens: Iterable[int]) -> frozenset[int]:
    """Smallest subset containing ``gens``, bottom and top, closed under
    meet, join and orthocomplement (fixpoint iteration)."""
    members = {lattice.bottom, lattice.top}
    members.update(gens)
    members.update(lattice.ocomp_table[g] for g in list(members))
    fresh = set(members)
    while fresh:
        new = set()
        current = sorted(members)
        for a in sorted(fresh):
            ca = lattice.ocomp_table[a]
            if ca not in members:
                new.add(ca)
            for b in current:
                for c in (lattice.meet(a, b), lattice.join(a, b)):
                    if c not in members:
                        new.add(c)
        members.update(new)
        fresh = new
    return frozenset(members)


def is_boolean(lattice: OrthoLattice, members: Iterable[int]) -> bool:
    """Whether a subalgebra is a Boolean algebra.

    Uses the pairwise law a = (a and b) or (a and b'): for subalgebras of an
    ortholattice this is equivalent to distributivity on all triples (it
    forces orthomodularity, and an orthomodular lattice whose pairs all
    commute is distributive).  The triple-based check is kept in the test
    suite as an oracle.
    """
    ms = frozenset(members)
    for a in ms:
        ca = lattice.ocomp_table[a]
        if ca not in ms:
            raise NotSubalgebra("member set not closed under orthocomplement")
        for b in ms:
            if lattice.meet(a, b) not in ms or lattice.join(a, b) not in ms:
                raise NotSubalgebra("member set not closed under meet/join")
    if lattice.bottom not in ms or lattice.top not in ms:
        raise NotSubalgebra("member set must contain bottom and top")
    for a in ms:
        for b in ms:
            cb = lattice.ocomp_table[b]
            if lattice.join(lattice.meet(a, b), lattice.meet(a, cb)) != a:
                return False
    return True


@dataclass(frozen=True)
class BooleanBlock:
    """Join-closure of the singleton closures of a clique."""

    lattice: OrthoLattice
    generator_elems: tuple[int, ...]
    members: frozenset[int]
    atom_count: int

    @property
    def top(self) -> int:
        t = self.lattice.bottom
        for g in self.generator_elems:
            t = self.lattice.join(t, g)
        return t


def boolean_block(space: OrthoSpace, clique: Subset, lattice: OrthoLattice | None = None) -> BooleanBlock:
    """The block B(e1, ..., ek): joins of singleton closures plus the empty
    join.  Requires a nonempty clique."""
    if clique.mask == 0 or not is_clique_mask(space, clique.mask):
        raise NotOrthogonalSet("boolean_block needs a nonempty orthogonal set")
    if lattice is None:
        lattice = build_lattice(space)
    gens = tuple(lattice.index_of(closure_mask(space, 1 << e)) for e in _bits(clique.mask))
    members = {lattice.bottom}
    members.update(gens)
    grew = True
    while grew:
        grew = False
        for a in sorted(members):
            for b in sorted(members):
                j = lattice.join(a, b)
                if j not in members:
                    members.add(j)
                    grew = True
    return BooleanBlock(lattice, gens, frozenset(members), clique.size)
