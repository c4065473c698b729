"""Normality, Dacey and linearity deciders, each with a witness.

Witnesses are always the lexicographically least counterexample found by the
documented iteration order, so failures reproduce bit-for-bit across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .core import (
    OrthoSpace,
    Subset,
    _bits,
    all_clique_masks,
    complement_mask,
    closure_mask,
    is_irredundant,
    is_orthoclosed,
    irreducibility_witness,
    maximal_orthogonal_sets,
    space_from_adj,
    strong_irredundancy_witness,
)
from .errors import EmptySubset, InternalInconsistency, NotOrthoclosed
from .lattice import OrthoLattice, build_lattice, generated_subalgebra, is_boolean, is_orthomodular


@dataclass(frozen=True)
class Check:
    """Boolean verdict plus an optional counterexample."""

    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


def _nonempty_proper_submasks(mask: int):
    """Unordered bipartitions (A, E\\A) of a clique mask: A runs over the
    subsets containing the least member, excluding A = E.  That yields the
    2^(len-1) - 1 splits once each."""
    members = list(_bits(mask))
    low = members[0]
    rest = members[1:]
    for pick in range(1 << len(rest)):
        a = 1 << low
        for t, m in enumerate(rest):
            if pick >> t & 1:
                a |= 1 << m
        if a != mask:
            yield a


def is_normal_fast(space: OrthoSpace) -> Check:
    """Split criterion over maximal cliques.

    For every maximal orthogonal set E and bipartition E = A | B: any f
    orthogonal to all of A and g orthogonal to all of B must satisfy f _|_ g.
    Witness: (E, (A, B), f, g) as label tuples.
    """
    for clique in maximal_orthogonal_sets(space):
        e_mask = clique.mask
        if e_mask.bit_count() < 2:
            continue
        for a_mask in _nonempty_proper_submasks(e_mask):
            b_mask = e_mask & ~a_mask
            fs = complement_mask(space, a_mask)
            gs = complement_mask(space, b_mask)
            for f in _bits(fs):
                if gs & ~space.adj[f]:
                    g = next(_bits(gs & ~space.adj[f]))
                    witness = (
                        clique.labels(),
                        (Subset(space, a_mask).labels(), Subset(space, b_mask).labels()),
                        space.labels[f],
                        space.labels[g],
                    )
                    return Check(False, witness)
    return Check(True)


def is_normal_oracle(space: OrthoSpace, lattice: OrthoLattice | None = None) -> bool:
    """Definition-level check: the subalgebra generated by the singleton
    closures of every clique must be Boolean."""
    if lattice is None:
        lattice = build_lattice(space)
    singleton = [lattice.index_of(closure_mask(space, 1 << e)) for e in range(space.n)]
    seen: set[tuple[int, ...]] = set()
    for mask in all_clique_masks(space):
        gens = tuple(sorted({singleton[e] for e in _bits(mask)}))
        if gens in seen:
            continue
        seen.add(gens)
        if not is_boolean(lattice, generated_subalgebra(lattice, gens)):
            return False
    return True


def _maximal_cliques_within(space: OrthoSpace, mask: int) -> list[int]:
    """Maximal cliques of the subgraph induced on ``mask``, as masks of the
    ambient space, in canonical order."""
    from .core import _maximal_clique_masks

    if mask == 0:
        return []
    members = list(_bits(mask))
    pos = {m: i for i, m in enumerate(members)}
    sub_adj = []
    for m in members:
        row = 0
        for x in _bits(space.adj[m] & mask):
            row |= 1 << pos[x]
        sub_adj.append(row)
    out = []
    for sub in _maximal_clique_masks(sub_adj, (1 << len(members)) - 1):
        amb = 0
        for i in _bits(sub):
            amb |= 1 << members[i]
        out.append(amb)
    out.sort(key=lambda m: tuple(_bits(m)))
    return out


def is_dacey(space: OrthoSpace, lattice: OrthoLattice | None = None) -> Check:
    """Dacey criterion: every maximal orthogonal subset D of an orthoclosed A
    has D'' = A.  Witness: (A, D) as label tuples.  Agrees with the lattice
    being orthomodular; classify() asserts that."""
    if lattice is None:
        lattice = build_lattice(space)
    for mask in lattice.elements:
        for d in _maximal_cliques_within(space, mask):
            if closure_mask(space, d) != mask:
                return Check(False, (Subset(space, mask).labels(), Subset(space, d).labels()))
    return Check(True)


def is_linear(space: OrthoSpace) -> Check:
    """For every ordered pair of distinct e, f there must be a g with
    {e,f}' = {e,g}' and exactly one of f, g orthogonal to e.  The scan covers
    all of X; g = e and g = f can never qualify.  Witness: failing (e, f)."""
    n = space.n
    for e in range(n):
        adj_e = space.adj[e]
        for f in range(n):
            if e == f:
                continue
            target = adj_e & space.adj[f]
            f_orth = bool(adj_e >> f & 1)
            ok = False
            for g in range(n):
                if (adj_e & space.adj[g]) == target and bool(adj_e >> g & 1) != f_orth:
                    ok = True
                    break
            if not ok:
                return Check(False, (space.labels[e], space.labels[f]))
    return Check(True)


def subspace(space: OrthoSpace, subset: Subset) -> OrthoSpace:
    """The induced space on an orthoclosed, nonempty subset.

    Elements keep their original labels, so the inclusion map back into the
    ambient space can be recovered by label lookup.
    """
    if subset.mask == 0:
        raise EmptySubset("cannot take the subspace on the empty set")
    if not is_orthoclosed(space, subset):
        raise NotOrthoclosed(f"{subset!r} is not orthoclosed")
    members = list(_bits(subset.mask))
    pos = {m: i for i, m in enumerate(members)}
    labels = tuple(space.labels[m] for m in members)
    adj = []
    for m in members:
        row = 0
        for x in _bits(space.adj[m] & subset.mask):
            row |= 1 << pos[x]
        adj.append(row)
    return space_from_adj(labels, adj)


@dataclass(frozen=True)
class ClassReport:
    """All structural flags of one space, plus witnesses for the false ones."""

    normal: bool
    dacey: bool
    linear: bool
    irredundant: bool
    strongly_irredundant: bool
    irreducible: bool
    lattice_size: int
    witnesses: dict[str, Any] = field(default_factory=dict)

    def flags(self) -> dict[str, bool]:
        return {
            "normal": self.normal,
            "dacey": self.dacey,
            "linear": self.linear,
            "irredundant": self.irredundant,
            "strongly_irredundant": self.strongly_irredundant,
            "irreducible": self.irreducible,
        }


def classify(space: OrthoSpace, size_limit: int | None = None) -> ClassReport:
    """Run every predicate and cross-check the implications between them.

    Raises InternalInconsistency if Dacey => normal, linear => strongly
    irredundant, or linear => irreducible + strongly irredundant + Dacey
    fails; those are theorems, so a violation is a bug.  The reverse of the
    last implication is deliberately not enforced: it fails already on the
    5-point space made of a triangle plus one disjoint orthogonal pair,
    which is an irreducible, strongly irredundant Dacey space admitting no
    linearity witness for a pair taken inside the triangle.
    """
    kwargs = {} if size_limit is None else {"size_limit": size_limit}
    lattice = build_lattice(space, **kwargs)

    witnesses: dict[str, Any] = {}
    normal = is_normal_fast(space)
    if not normal:
        witnesses["normal"] = normal.witness
    dacey = is_dacey(space, lattice)
    if not dacey:
        witnesses["dacey"] = dacey.witness
    linear = is_linear(space)
    if not linear:
        witnesses["linear"] = linear.witness
    irred = is_irredundant(space)
    sw = strong_irredundancy_witness(space)
    if sw is not None:
        witnesses["strongly_irredundant"] = (space.labels[sw[0]], space.labels[sw[1]])
    iw = irreducibility_witness(space)
    if iw is not None:
        witnesses["irreducible"] = tuple(space.labels[i] for i in iw)

    report = ClassReport(
        normal=normal.ok,
        dacey=dacey.ok,
        linear=linear.ok,
        irredundant=irred,
        strongly_irredundant=sw is None,
        irreducible=iw is None,
        lattice_size=lattice.size,
        witnesses=witnesses,
    )

    omod = is_orthomodular(lattice)
    if omod.ok != dacey.ok:
        raise InternalInconsistency("Dacey criterion disagrees with lattice orthomodularity")
    if report.dacey and not report.normal:
        raise InternalInconsistency("Dacey space classified as non-normal")
    if report.linear and not report.strongly_irredundant:
        raise InternalInconsistency("linear space classified as redundant")
    if report.linear and not (report.irreducible and report.strongly_irredundant and report.dacey):
        raise InternalInconsistency("linear space missing a property linearity implies")
    return report
