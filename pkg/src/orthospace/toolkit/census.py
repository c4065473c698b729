"""Isomorphism-class census of small orthogonality spaces.

Enumeration picks the minimal edge mask of each class by walking all edge
masks in ascending order and marking the orbit of every unseen graph, so the
representative set is canonical by construction.  Certificates for arbitrary
spaces come from an individualisation-refinement search for the minimal
adjacency string; the two agree and are cross-checked against pairwise
isomorphism testing in the tests.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from ..classify import ClassReport, classify, is_normal_fast, subspace
from ..core import OrthoSpace, Subset, default_labels, edge_mask_of, space_from_edge_mask
from ..errors import BadParameter, InternalInconsistency
from ..lattice import build_lattice
from ..morphisms import inclusion, is_normal_hom

MAX_CENSUS_N = 7

_CHUNK = 8  # bits per lookup-table chunk when permuting edge masks


def _pair_positions(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _perm_tables(n: int) -> list[list[list[int]]]:
    """Per permutation, chunked lookup tables mapping edge-mask fragments to
    their image under the permutation."""
    pairs = _pair_positions(n)
    pos = {p: k for k, p in enumerate(pairs)}
    npairs = len(pairs)
    tables = []
    for perm in itertools.permutations(range(n)):
        bitmap = [pos[tuple(sorted((perm[i], perm[j])))] for i, j in pairs]
        chunks = []
        for base in range(0, npairs, _CHUNK):
            width = min(_CHUNK, npairs - base)
            tab = [0] * (1 << width)
            for v in range(1 << width):
                img = 0
                w = v
                while w:
                    low = w & -w
                    img |= 1 << bitmap[base + low.bit_length() - 1]
                    w ^= low
                tab[v] = img
            chunks.append(tab)
        tables.append(chunks)
    return tables


def class_representatives(n: int) -> list[int]:
    """Minimal edge mask per isomorphism class of graphs on n vertices."""
    if n < 1:
        raise BadParameter("need n >= 1")
    if n == 1:
        return [0]
    npairs = n * (n - 1) // 2
    tables = _perm_tables(n)
    seen = bytearray(1 << npairs)
    reps = []
    mask_chunks = [(base, (1 << min(_CHUNK, npairs - base)) - 1) for base in range(0, npairs, _CHUNK)]
    for g in range(1 << npairs):
        if seen[g]:
            continue
        reps.append(g)
        for chunks in tables:
            img = 0
            for (base, cmask), tab in zip(mask_chunks, chunks):
                img |= tab[(g >> base) & cmask]
            seen[img] = 1
    return reps


def _refine(adj: Sequence[int], colors: list[int]) -> list[int]:
    n = len(adj)
    while True:
        sig = []
        for i in range(n):
            neigh = sorted(colors[j] for j in range(n) if adj[i] >> j & 1)
            sig.append((colors[i], tuple(neigh)))
        order = {s: c for c, s in enumerate(sorted(set(sig)))}
        new = [order[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def _adjacency_string(adj: Sequence[int], perm: Sequence[int]) -> int:
    """Edge mask of the graph relabelled so vertex perm[k] becomes k."""
    n = len(adj)
    inv = [0] * n
    for k, v in enumerate(perm):
        inv[v] = k
    mask = 0
    bit = 0
    for i in range(n):
        for j in range(i + 1, n):
            if adj[perm[i]] >> perm[j] & 1:
                mask |= 1 << bit
            bit += 1
    return mask


def canonical_certificate(space: OrthoSpace) -> str:
    """Canonical form: n plus the minimal edge mask over a refined
    individualisation search.  Equal certificates iff isomorphic."""
    n = space.n
    adj = space.adj
    best: list[int | None] = [None]

    def descend(colors: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = c
                break
        if target is None:
            perm = [v for _, v in sorted((c, v) for v, c in enumerate(colors))]
            mask = _adjacency_string(adj, perm)
            if best[0] is None or mask < best[0]:
                best[0] = mask
            return
        for v in cells[target]:
            forked = list(colors)
            forked[v] = -1  # individualise ahead of its old cell
            forked = _refine(adj, forked)
            descend(forked)

    descend(_refine(adj, [0] * n))
    return f"{n}:{best[0]:x}"


def isomorphic(a: OrthoSpace, b: OrthoSpace) -> bool:
    """Brute-force isomorphism test (used as the census dedup oracle)."""
    if a.n != b.n:
        return False
    da = sorted(x.bit_count() for x in a.adj)
    db = sorted(x.bit_count() for x in b.adj)
    if da != db:
        return False
    ea = edge_mask_of(a)
    for perm in itertools.permutations(range(a.n)):
        if _adjacency_string(b.adj, perm) == ea:
            return True
    return False


@dataclass(frozen=True)
class CensusRecord:
    certificate: str
    n: int
    edge_mask: int
    report: ClassReport

    def space(self) -> OrthoSpace:
        return space_from_edge_mask(self.n, self.edge_mask)


def _check_theorems(space: OrthoSpace, report: ClassReport) -> None:
    """Universal small-instance checks tied to every census class.

    Only the provable directions are asserted.  The converse of the
    linearity characterisation (irreducible + strongly irredundant + Dacey
    implying linear) is false: the census itself refutes it from n = 5 on,
    the smallest refuting class being a triangle plus a disjoint orthogonal
    pair.  Those classes are collected by linearity_converse_violations.
    """
    if report.dacey and not report.normal:
        raise InternalInconsistency("found a Dacey class that is not normal")
    if report.linear and not report.strongly_irredundant:
        raise InternalInconsistency("found a linear class that is not strongly irredundant")
    if report.linear and not (report.irreducible and report.strongly_irredundant and report.dacey):
        raise InternalInconsistency("found a linear class missing an implied property")
    if report.normal:
        # A normal space is Dacey exactly when every orthoclosed subspace is
        # normal and includes normally.
        lattice = build_lattice(space)
        subspaces_fine = True
        for mask in lattice.elements:
            if mask == 0:
                continue
            sub = subspace(space, Subset(space, mask))
            if not is_normal_fast(sub):
                subspaces_fine = False
                break
            if not is_normal_hom(inclusion(sub, space)):
                subspaces_fine = False
                break
        if subspaces_fine != report.dacey:
            raise InternalInconsistency("Dacey/subspace-inclusion equivalence failed on a census class")


def census_classes(n: int) -> Iterator[OrthoSpace]:
    labels = default_labels(n)
    for mask in class_representatives(n):
        yield space_from_edge_mask(n, mask, labels)


def linearity_converse_violations(records: Sequence["CensusRecord"]) -> list["CensusRecord"]:
    """Census classes that are irreducible, strongly irredundant and Dacey
    without being linear; nonempty from n = 5 on."""
    return [r for r in records
            if (r.report.irreducible and r.report.strongly_irredundant and r.report.dacey)
            and not r.report.linear]


def census(max_n: int, workers: int = 1, check_theorems: bool = True,
            progress: Callable[[str], None] | None = None) -> list[CensusRecord]:
    """Classify one representative per isomorphism class for 1 <= n <= max_n.

    When ``check_theorems`` is set, each class is also run through the
    universal assertions; any violation raises InternalInconsistency.
    Classification is pure, so classes may be processed by several workers;
    results keep enumeration order either way.
    """
    if not 1 <= max_n <= MAX_CENSUS_N:
        raise BadParameter(f"census supports 1 <= n <= {MAX_CENSUS_N}")
    records: list[CensusRecord] = []

    def work(space: OrthoSpace) -> CensusRecord:
        report = classify(space)
        if check_theorems:
            _check_theorems(space, report)
        return CensusRecord(canonical_certificate(space), space.n, edge_mask_of(space), report)

    for n in range(1, max_n + 1):
        spaces = list(census_classes(n))
        if progress:
            progress(f"n={n}: {len(spaces)} classes")
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                records.extend(pool.map(work, spaces))
        else:
            records.extend(map(work, spaces))
    return records


def census_summary(records: Sequence[CensusRecord]) -> list[dict]:
    """Per-n counts of classes and of the principal flags."""
    rows = []
    for n in sorted({r.n for r in records}):
        batch = [r for r in records if r.n == n]
        rows.append({
            "n": n,
            "spaces": len(batch),
            "normal": sum(r.report.normal for r in batch),
            "dacey": sum(r.report.dacey for r in batch),
            "linear": sum(r.report.linear for r in batch),
        })
    return rows
