"""Maps between orthogonality spaces: verification, search, composition.

The production normality check for a homomorphism inspects only maximal
cliques (the cheapest of the equivalent criteria); the all-cliques variant is
exposed as a debug oracle and the two are compared exhaustively in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterator

from .classify import Check, is_normal_fast
from .core import OrthoSpace, Subset, _bits, all_clique_masks, closure_mask, maximal_orthogonal_sets
from .errors import Mismatch, NotHomomorphism, SourceNotNormal, TargetNotNormal
from .lattice import OrthoLattice, build_lattice

UNCHECKED = "unchecked"
HOMOMORPHISM = "homomorphism"
NORMAL = "normal"

DEFAULT_CAP = 1_000_000


@dataclass(frozen=True)
class SpaceMap:
    """A total map between two spaces; ``table[i]`` is the image index."""

    src: OrthoSpace
    dst: OrthoSpace
    table: tuple[int, ...]
    status: str = UNCHECKED

    def __post_init__(self):
        if len(self.table) != self.src.n:
            raise ValueError("image table must be total")
        for t in self.table:
            if not 0 <= t < self.dst.n:
                raise ValueError("image index out of range")

    def __call__(self, i: int) -> int:
        return self.table[i]

    def image_mask(self, mask: int) -> int:
        out = 0
        for i in _bits(mask):
            out |= 1 << self.table[i]
        return out

    def to_json(self) -> dict:
        return {
            "src": {"labels": list(self.src.labels), "edges": [[self.src.labels[i], self.src.labels[j]] for i, j in self.src.edges()]},
            "dst": {"labels": list(self.dst.labels), "edges": [[self.dst.labels[i], self.dst.labels[j]] for i, j in self.dst.edges()]},
            "table": [self.dst.labels[t] for t in self.table],
            "status": self.status,
        }


def identity_map(space: OrthoSpace) -> SpaceMap:
    return SpaceMap(space, space, tuple(range(space.n)), status=HOMOMORPHISM)


def space_map(src: OrthoSpace, dst: OrthoSpace, assignment: dict[str, str]) -> SpaceMap:
    """Build a map from a label-to-label assignment."""
    table = tuple(dst.index(assignment[lab]) for lab in src.labels)
    return SpaceMap(src, dst, table)


def inclusion(sub: OrthoSpace, ambient: OrthoSpace) -> SpaceMap:
    """The inclusion of a subspace (matched by label) into its ambient space."""
    return SpaceMap(sub, ambient, tuple(ambient.index(lab) for lab in sub.labels))


def is_homomorphism(m: SpaceMap) -> bool:
    """Orthogonality preservation on every edge."""
    for i, j in m.src.edges():
        if not m.dst.is_orthogonal(m.table[i], m.table[j]):
            return False
    return True


def _require_normal_pair(m: SpaceMap) -> None:
    if not is_homomorphism(m):
        raise NotHomomorphism("map does not preserve orthogonality")
    if not is_normal_fast(m.src):
        raise SourceNotNormal("normality of a map is defined between normal spaces")
    if not is_normal_fast(m.dst):
        raise TargetNotNormal("normality of a map is defined between normal spaces")


def is_normal_hom(m: SpaceMap) -> Check:
    """Maximal-clique criterion: phi(X) must lie inside phi(E)'' for every
    maximal orthogonal set E of the source.  Witness: (E, x) with x the first
    element mapped outside."""
    _require_normal_pair(m)
    phi_x = m.image_mask(m.src.full_mask)
    for clique in maximal_orthogonal_sets(m.src):
        hull = closure_mask(m.dst, m.image_mask(clique.mask))
        stray = phi_x & ~hull
        if stray:
            x = None
            for i in range(m.src.n):
                if stray >> m.table[i] & 1:
                    x = i
                    break
            return Check(False, (clique.labels(), m.src.labels[x]))
    return Check(True)


def normal_hom_oracle(m: SpaceMap) -> Check:
    """All-cliques criterion: phi(D'') inside phi(D)'' for every nonempty
    orthogonal set D.  Slower; used to cross-validate is_normal_hom."""
    _require_normal_pair(m)
    for d in all_clique_masks(m.src):
        lhs = m.image_mask(closure_mask(m.src, d))
        rhs = closure_mask(m.dst, m.image_mask(d))
        if lhs & ~rhs:
            return Check(False, Subset(m.src, d).labels())
    return Check(True)


def verified(m: SpaceMap) -> SpaceMap:
    """Return a copy whose status reflects what actually holds."""
    if not is_homomorphism(m):
        return replace(m, status=UNCHECKED)
    try:
        if is_normal_hom(m):
            return replace(m, status=NORMAL)
    except (SourceNotNormal, TargetNotNormal):
        pass
    return replace(m, status=HOMOMORPHISM)


@dataclass(frozen=True)
class InducedMap:
    """The map A -> phi(A)'' between the two ortholattices."""

    source_lattice: OrthoLattice
    target_lattice: OrthoLattice
    table: tuple[int, ...]


def induced_lattice_map(
    m: SpaceMap,
    src_lattice: OrthoLattice | None = None,
    dst_lattice: OrthoLattice | None = None,
    verify: bool = True,
) -> InducedMap:
    """Push a homomorphism down to the lattices; verifies order and
    orthogonality preservation and that bottom goes to bottom."""
    if not is_homomorphism(m):
        raise NotHomomorphism("induced map requires a homomorphism")
    src_lattice = src_lattice or build_lattice(m.src)
    dst_lattice = dst_lattice or build_lattice(m.dst)
    table = tuple(
        dst_lattice.index_of(closure_mask(m.dst, m.image_mask(mask)))
        for mask in src_lattice.elements
    )
    induced = InducedMap(src_lattice, dst_lattice, table)
    if verify:
        assert table[src_lattice.bottom] == dst_lattice.bottom
        size = src_lattice.size
        for a in range(size):
            for b in range(size):
                if src_lattice.leq(a, b) and not dst_lattice.leq(table[a], table[b]):
                    raise AssertionError("induced map failed to preserve order")
                if src_lattice.orthogonal(a, b) and not dst_lattice.orthogonal(table[a], table[b]):
                    raise AssertionError("induced map failed to preserve orthogonality")
    return induced


@dataclass(frozen=True)
class HomSet:
    """Enumeration result; iterable, with an explicit truncation flag."""

    maps: tuple[SpaceMap, ...]
    truncated: bool
    cap: int

    def __iter__(self) -> Iterator[SpaceMap]:
        return iter(self.maps)

    def __len__(self) -> int:
        return len(self.maps)


def enumerate_homs(src: OrthoSpace, dst: OrthoSpace, normal_only: bool = False,
                   cap: int = DEFAULT_CAP) -> HomSet:
    """All homomorphisms src -> dst by backtracking over element images with
    edge-consistency pruning; lexicographic by image table."""
    if normal_only:
        if not is_normal_fast(src):
            raise SourceNotNormal("normal_only search needs a normal source")
        if not is_normal_fast(dst):
            raise TargetNotNormal("normal_only search needs a normal target")
        src_cliques = [c.mask for c in maximal_orthogonal_sets(src)]

    n, dn = src.n, dst.n
    table = [0] * n
    found: list[SpaceMap] = []
    truncated = False

    def ok_so_far(i: int) -> bool:
        ti = table[i]
        for j in _bits(src.adj[i] & ((1 << i) - 1)):
            if not dst.adj[table[j]] >> ti & 1:
                return False
        return True

    def accept() -> bool:
        m = SpaceMap(src, dst, tuple(table), status=HOMOMORPHISM)
        if normal_only:
            phi_x = m.image_mask(src.full_mask)
            for cm in src_cliques:
                if phi_x & ~closure_mask(dst, m.image_mask(cm)):
                    return True
            m = replace(m, status=NORMAL)
        found.append(m)
        return len(found) < cap

    def walk(i: int) -> bool:
        if i == n:
            return accept()
        for t in range(dn):
            table[i] = t
            if ok_so_far(i):
                if not walk(i + 1):
                    return False
        return True

    if not walk(0):
        truncated = True
    return HomSet(tuple(found), truncated, cap)


def automorphisms(space: OrthoSpace) -> list[SpaceMap]:
    """The full automorphism group, by backtracking over bijections that
    preserve orthogonality in both directions."""
    n = space.n
    degree = [space.adj[i].bit_count() for i in range(n)]
    table = [0] * n
    used = [False] * n
    out: list[SpaceMap] = []

    def walk(i: int) -> None:
        if i == n:
            out.append(SpaceMap(space, space, tuple(table), status=HOMOMORPHISM))
            return
        for t in range(n):
            if used[t] or degree[t] != degree[i]:
                continue
            good = True
            for j in range(i):
                if (space.adj[i] >> j & 1) != (space.adj[table[j]] >> t & 1):
                    good = False
                    break
            if good:
                used[t] = True
                table[i] = t
                walk(i + 1)
                used[t] = False

    walk(0)
    return out


def compose(f: SpaceMap, g: SpaceMap) -> SpaceMap:
    """Apply f first, then g.  The composite of two normal maps is normal."""
    if f.dst != g.src:
        raise Mismatch("codomain of the first map must equal the domain of the second")
    table = tuple(g.table[t] for t in f.table)
    if f.status == NORMAL and g.status == NORMAL:
        status = NORMAL
    elif f.status in (HOMOMORPHISM, NORMAL) and g.status in (HOMOMORPHISM, NORMAL):
        status = HOMOMORPHISM
    else:
        status = UNCHECKED
    return SpaceMap(f.src, g.dst, table, status=status)
