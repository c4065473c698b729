"""Finite orthogonality spaces as adjacency bitmasks.

An orthogonality space is a finite set with a symmetric, irreflexive binary
relation.  Elements are indexed 0..n-1; labels are presentation only.  All
set-valued computations run on Python integers used as bitmasks, which covers
both the small (word-sized) and the large case with one code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from string import ascii_lowercase
from typing import Iterable, Iterator, Sequence

from .errors import DuplicateLabel, EmptySubset, NotOrthogonalSet, SelfLoop, UnknownLabel


def _bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def default_labels(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple(ascii_lowercase[:n])
    return tuple(f"x{i}" for i in range(n))


@dataclass(frozen=True)
class OrthoSpace:
    """A finite orthogonality space.

    ``adj[i]`` is the bitmask of elements orthogonal to element ``i``.
    Invariants: the relation is irreflexive and symmetric, and n >= 1.
    """

    labels: tuple[str, ...]
    adj: tuple[int, ...]

    def __post_init__(self):
        n = len(self.labels)
        if n < 1:
            raise EmptySubset("an orthogonality space needs at least one element")
        if len(set(self.labels)) != n:
            raise DuplicateLabel("labels must be distinct")
        if len(self.adj) != n:
            raise ValueError("adjacency table length does not match label count")
        full = (1 << n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError("adjacency mask uses bits outside the element range")
            if row >> i & 1:
                raise SelfLoop(f"element {self.labels[i]!r} orthogonal to itself")
        for i in range(n):
            for j in _bits(self.adj[i]):
                if not self.adj[j] >> i & 1:
                    raise ValueError("orthogonality relation must be symmetric")

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabel(f"no element labelled {label!r}") from None

    def is_orthogonal(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All orthogonal pairs (i, j) with i < j, sorted."""
        return [(i, j) for i in range(self.n) for j in _bits(self.adj[i]) if i < j]

    def subset(self, members: Iterable[str | int] = ()) -> "Subset":
        mask = 0
        for m in members:
            mask |= 1 << (m if isinstance(m, int) else self.index(m))
        return Subset(self, mask)

    def full_subset(self) -> "Subset":
        return Subset(self, self.full_mask)

    def __repr__(self):
        return f"OrthoSpace({self.n} elements, {len(self.edges())} edges)"


@dataclass(frozen=True)
class Subset:
    """A subset of an orthogonality space, stored as a bitmask."""

    space: OrthoSpace
    mask: int

    def __post_init__(self):
        if self.mask & ~self.space.full_mask:
            raise ValueError("subset mask uses bits outside the space")

    def members(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    def labels(self) -> tuple[str, ...]:
        return tuple(self.space.labels[i] for i in _bits(self.mask))

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, item: str | int) -> bool:
        i = item if isinstance(item, int) else self.space.index(item)
        return bool(self.mask >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __le__(self, other: "Subset") -> bool:
        return self.mask & ~other.mask == 0

    def __repr__(self):
        return "{" + ",".join(self.labels()) + "}"


def new_space(n: int, edges: Sequence[tuple[str, str]] = (), labels: Sequence[str] | None = None) -> OrthoSpace:
    """Build a validated space from labelled edge pairs.

    Labels default to a, b, c, ... and the edge list is symmetrised.
    """
    labels = tuple(labels) if labels is not None else default_labels(n)
    if len(labels) != n:
        raise ValueError(f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise DuplicateLabel("labels must be distinct")
    where = {lab: i for i, lab in enumerate(labels)}
    adj = [0] * n
    for x, y in edges:
        if x == y:
            raise SelfLoop(f"edge ({x!r}, {y!r}) would violate irreflexivity")
        try:
            i, j = where[x], where[y]
        except KeyError as k:
            raise UnknownLabel(f"edge mentions unknown label {k.args[0]!r}") from None
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return OrthoSpace(labels, tuple(adj))


def space_from_adj(labels: Sequence[str], adj: Sequence[int]) -> OrthoSpace:
    return OrthoSpace(tuple(labels), tuple(adj))


def space_from_edge_mask(n: int, edge_mask: int, labels: Sequence[str] | None = None) -> OrthoSpace:
    """Space from a bitmask over the n*(n-1)/2 unordered pairs in lex order."""
    adj = [0] * n
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if edge_mask >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    labels = tuple(labels) if labels is not None else default_labels(n)
    return OrthoSpace(labels, tuple(adj))


def edge_mask_of(space: OrthoSpace) -> int:
    mask = 0
    k = 0
    n = space.n
    for i in range(n):
        for j in range(i + 1, n):
            if space.adj[i] >> j & 1:
                mask |= 1 << k
            k += 1
    return mask


# -- complements and closures -------------------------------------------------

def complement_mask(space: OrthoSpace, mask: int) -> int:
    """Mask of elements orthogonal to everything in ``mask``."""
    out = space.full_mask
    for i in _bits(mask):
        out &= space.adj[i]
    return out


def closure_mask(space: OrthoSpace, mask: int) -> int:
    return complement_mask(space, complement_mask(space, mask))


def _owned(space: OrthoSpace, subset: Subset) -> int:
    if subset.space is not space and subset.space != space:
        raise ValueError("subset belongs to a different space")
    return subset.mask


def ortho_complement(space: OrthoSpace, subset: Subset) -> Subset:
    """The set of elements orthogonal to every member of ``subset``.

    The complement of the empty set is the whole space.
    """
    return Subset(space, complement_mask(space, _owned(space, subset)))


def ortho_closure(space: OrthoSpace, subset: Subset) -> Subset:
    """Double complement; an extensive, monotone, idempotent closure."""
    return Subset(space, closure_mask(space, _owned(space, subset)))


def is_orthoclosed(space: OrthoSpace, subset: Subset) -> bool:
    m = _owned(space, subset)
    return closure_mask(space, m) == m


# -- cliques -------------------------------------------------------------------

def is_clique_mask(space: OrthoSpace, mask: int) -> bool:
    for i in _bits(mask):
        rest = mask & ~(1 << i)
        if rest & ~space.adj[i]:
            return False
    return True


def _maximal_clique_masks(adj: Sequence[int], full: int) -> list[int]:
    """All maximal cliques, via pivoted Bron-Kerbosch on bitmasks."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pool = p | x
        pivot, best = -1, -1
        m = pool
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            cnt = (p & adj[u]).bit_count()
            if cnt > best:
                pivot, best = u, cnt
        cand = p & ~adj[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(r | low, p & adj[v], x & adj[v])
            p ^= low
            x |= low

    expand(0, full, 0)
    out.sort(key=lambda m: tuple(_bits(m)))
    return out


def maximal_orthogonal_sets(space: OrthoSpace) -> list[Subset]:
    """All inclusion-maximal sets of mutually orthogonal elements.

    Deterministic order: lexicographic by sorted member indices.
    """
    return [Subset(space, m) for m in _maximal_clique_masks(space.adj, space.full_mask)]


def rank(space: OrthoSpace) -> int:
    """Size of the largest set of mutually orthogonal elements."""
    return max(m.bit_count() for m in _maximal_clique_masks(space.adj, space.full_mask))


def extend_to_maximal(space: OrthoSpace, subset: Subset) -> Subset:
    """Extend a clique to a maximal one, greedily by smallest index."""
    mask = _owned(space, subset)
    if not is_clique_mask(space, mask):
        raise NotOrthogonalSet(f"{subset!r} is not a set of mutually orthogonal elements")
    common = space.full_mask
    for i in _bits(mask):
        common &= space.adj[i]
    while common:
        low = common & -common
        mask |= low
        common &= space.adj[low.bit_length() - 1]
    return Subset(space, mask)


def all_clique_masks(space: OrthoSpace) -> list[int]:
    """Every nonempty clique, each listed once (ascending member order)."""
    out: list[int] = []

    def grow(mask: int, cand: int) -> None:
        while cand:
            low = cand & -cand
            cand ^= low
            ext = mask | low
            out.append(ext)
            grow(ext, cand & space.adj[low.bit_length() - 1])

    grow(0, space.full_mask)
    return out


# -- structural predicates -----------------------------------------------------

def is_irredundant(space: OrthoSpace) -> bool:
    """No two distinct elements have the same singleton complement."""
    return len(set(space.adj)) == space.n


def strong_irredundancy_witness(space: OrthoSpace) -> tuple[int, int] | None:
    """A pair e != f with {e}' contained in {f}', if one exists."""
    for e in range(space.n):
        for f in range(space.n):
            if e != f and space.adj[e] & ~space.adj[f] == 0:
                return (e, f)
    return None


def is_strongly_irredundant(space: OrthoSpace) -> bool:
    return strong_irredundancy_witness(space) is None


def irreducibility_witness(space: OrthoSpace) -> tuple[int, ...] | None:
    """A part of a separating partition (everything across is orthogonal).

    Computed as a connected component of the non-orthogonality graph; the
    one-element space is irreducible (no valid partition exists).
    """
    n = space.n
    non_adj = [~space.adj[i] & space.full_mask & ~(1 << i) for i in range(n)]
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for i in _bits(frontier):
            nxt |= non_adj[i]
        frontier = nxt & ~seen
        seen |= nxt
    if seen == space.full_mask:
        return None
    return tuple(_bits(seen))


def is_irreducible(space: OrthoSpace) -> bool:
    return irreducibility_witness(space) is None
