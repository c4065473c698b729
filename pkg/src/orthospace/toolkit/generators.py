"""Parametric space families and the fixture spaces shipped with the tests."""

from __future__ import annotations

import itertools

from ..core import OrthoSpace, default_labels, new_space
from ..errors import BadParameter


def nset(n: int) -> OrthoSpace:
    """The n-element space in which distinct elements are orthogonal."""
    if n < 1:
        raise BadParameter("nset needs n >= 1")
    labels = default_labels(n)
    return new_space(n, [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)], labels)


def dspace(n: int) -> OrthoSpace:
    """2n points 0_i, 1_i with 0_i orthogonal to 1_i and no further pair."""
    if n < 2:
        raise BadParameter("dspace needs n >= 2")
    labels = tuple(f"{b}_{i + 1}" for i in range(n) for b in "01")
    edges = [(f"0_{i + 1}", f"1_{i + 1}") for i in range(n)]
    return new_space(2 * n, edges, labels)


def path_space(n: int) -> OrthoSpace:
    """A path; the 4-point path is the smallest non-normal space."""
    if n < 1:
        raise BadParameter("path needs n >= 1")
    labels = default_labels(n)
    return new_space(n, [(labels[i], labels[i + 1]) for i in range(n - 1)], labels)


def triangle_with_tails() -> OrthoSpace:
    """Five points: a triangle a, b, c with d orthogonal only to a and e
    orthogonal to b and c.  Not normal and not Dacey; the workhorse small
    counterexample of the test suite."""
    return new_space(5, [("a", "b"), ("a", "c"), ("b", "c"), ("a", "d"), ("b", "e"), ("c", "e")])


def _from_cliques(n: int, cliques) -> OrthoSpace:
    edges = sorted({tuple(sorted(p)) for c in cliques for p in itertools.combinations(c, 2)})
    return new_space(n, edges)


def triad_square() -> OrthoSpace:
    """Eight points carrying four three-element maximal orthogonal sets
    arranged in a closed square: a-b-c, c-d-e, e-f-g, g-h-a.

    Normal but not Dacey ({a, e} is orthoclosed while {a}'' = {a}), every
    subspace is normal, and the inclusion of {a, e} is not a normal
    homomorphism.
    """
    return _from_cliques(8, [("a", "b", "c"), ("c", "d", "e"), ("e", "f", "g"), ("g", "h", "a")])


def twin_squares() -> OrthoSpace:
    """Twelve points assembled from six four-element maximal orthogonal sets:
    two central squares sharing the pair f, g, plus four bridging sets.

    Normal, yet the orthoclosed subset {e,h}' = {a, f, g, l} induces a
    4-path, which is not normal: a normal space with a non-normal subspace.
    """
    return _from_cliques(12, [
        ("d", "e", "f", "g"),
        ("f", "g", "h", "i"),
        ("a", "b", "e", "f"),
        ("g", "h", "k", "l"),
        ("a", "c", "f", "h"),
        ("e", "g", "j", "l"),
    ])


def peres_rays():
    """The 33-ray configuration in three dimensions over Q(sqrt 2).

    Returns (space, points): the orthogonality space of the rays built with
    make_projective_fragment, plus the projective points in the same order.
    Components are drawn from {0, +-1, +-sqrt 2}; the ray set admits no
    two-valued measure, which the backtracking search proves exhaustively.
    """
    from ..hermitian import HermitianSpace, ProjPoint, make_projective_fragment
    from ..scalars import QuadExt

    field = QuadExt(2)
    zero, one = field.zero, field.one
    minus = -one
    root = field.sqrt_gen
    vectors = []
    axes = [(one, zero, zero), (zero, one, zero), (zero, zero, one)]
    vectors.extend(axes)
    for s in (one, minus):
        # two equal-weight components, one zero
        vectors.append((zero, one, s))
        vectors.append((one, zero, s))
        vectors.append((one, s, zero))
    for s in (root, -root):
        # one component of weight sqrt 2
        vectors.append((zero, one, s))
        vectors.append((zero, s, one))
        vectors.append((one, zero, s))
        vectors.append((s, zero, one))
        vectors.append((one, s, zero))
        vectors.append((s, one, zero))
    for s1 in (one, minus):
        for s2 in (root, -root):
            vectors.append((one, s1, s2))
            vectors.append((one, s2, s1))
            vectors.append((s2, one, s1))
    H = HermitianSpace.standard(field, 3, positive_definite=True)
    space = make_projective_fragment(H, vectors)
    points = [ProjPoint(H, v) for v in vectors]
    assert space.n == 33
    return space, points


def _fragment(vector_rows):
    from ..hermitian import HermitianSpace, make_projective_fragment
    from ..scalars import Rationals

    field = Rationals()
    table = {0: field.zero, 1: field.one, -1: -field.one}
    vectors = [tuple(table[c] for c in row) for row in vector_rows]
    H = HermitianSpace.standard(field, 3, positive_definite=True)
    return make_projective_fragment(H, vectors)


def rational_fragment():
    """A 13-point fragment of rational projective 3-space: the unit vectors,
    the (1, +-1, 0) family and the (1, +-1, +-1) family.

    This fragment is neither normal nor Dacey; too many completing rays are
    missing.  Its classification is pinned by the regression tests."""
    return _fragment([
        (1, 0, 0), (0, 1, 0), (0, 0, 1),
        (1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1),
        (1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1),
    ])


def rational_fragment9():
    """The 9-point subfamily (units plus the (1, +-1, 0) family), which is
    closed under completing orthogonal pairs to triples.

    Normal, Dacey, irreducible and strongly irredundant, yet not linear: an
    orthogonal pair like (1,0,0), (0,1,1) admits no witness inside the
    fragment.  The smallest such space has 5 points (a triangle plus one
    disjoint orthogonal pair); this one is the smallest with a connected
    orthogonality graph that we ship."""
    return _fragment([
        (1, 0, 0), (0, 1, 0), (0, 0, 1),
        (1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1),
    ])


def triangle_plus_pair():
    """A triangle plus one disjoint orthogonal pair: the smallest
    irreducible, strongly irredundant Dacey space that is not linear."""
    return new_space(5, [("a", "e"), ("b", "c"), ("b", "d"), ("c", "d")])
