"""Brute-force reference implementations the fast code is checked against.

Everything here works straight from definitions, enumerating subsets or
permutations, and shares no code with the production paths.
"""

import itertools

from orthospace.core import OrthoSpace


def members(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def complement_brute(space: OrthoSpace, mask: int) -> int:
    out = 0
    for x in range(space.n):
        if all(space.adj[a] >> x & 1 for a in members(mask)):
            out |= 1 << x
    return out


def closure_brute(space: OrthoSpace, mask: int) -> int:
    return complement_brute(space, complement_brute(space, mask))


def orthoclosed_sets_brute(space: OrthoSpace) -> set[int]:
    """Fixed points of the double complement over all 2^n subsets."""
    return {closure_brute(space, m) for m in range(1 << space.n)}


def is_clique_brute(space: OrthoSpace, mask: int) -> bool:
    ms = members(mask)
    return all(space.adj[a] >> b & 1 for a, b in itertools.combinations(ms, 2))


def maximal_cliques_brute(space: OrthoSpace) -> set[int]:
    cliques = [m for m in range(1, 1 << space.n) if is_clique_brute(space, m)]
    out = set()
    for c in cliques:
        if not any(other != c and other & c == c for other in cliques):
            out.add(c)
    if not cliques:
        out = {1 << i for i in range(space.n)}
    return out


def two_valued_measures_brute(space: OrthoSpace) -> list[tuple[int, ...]]:
    cliques = maximal_cliques_brute(space)
    out = []
    for bits in itertools.product((0, 1), repeat=space.n):
        if all(sum(bits[i] for i in members(c)) == 1 for c in cliques):
            out.append(bits)
    return out


def isomorphic_brute(a: OrthoSpace, b: OrthoSpace) -> bool:
    if a.n != b.n:
        return False
    for perm in itertools.permutations(range(a.n)):
        if all((a.adj[i] >> j & 1) == (b.adj[perm[i]] >> perm[j] & 1)
               for i in range(a.n) for j in range(a.n)):
            return True
    return False


def automorphisms_brute(space: OrthoSpace) -> list[tuple[int, ...]]:
    out = []
    for perm in itertools.permutations(range(space.n)):
        if all((space.adj[i] >> j & 1) == (space.adj[perm[i]] >> perm[j] & 1)
               for i in range(space.n) for j in range(space.n)):
            out.append(perm)
    return out


def boolean_by_distributivity(lattice, ms) -> bool:
    """Triple-based distributivity test, the oracle for is_boolean."""
    ms = sorted(ms)
    for a in ms:
        for b in ms:
            for c in ms:
                lhs = lattice.meet(a, lattice.join(b, c))
                rhs = lattice.join(lattice.meet(a, b), lattice.meet(a, c))
                if lhs != rhs:
                    return False
    return True
