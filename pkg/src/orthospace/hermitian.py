"""Finite-dimensional Hermitian spaces over exact star-fields.

Covers inner products and exact subspace arithmetic, projective points and
collinearity, constructive linearity witnesses, generalised semilinear maps
given by a matrix over the target field together with a place, the induced
maps between projective spaces, and sampled certification of the lineation,
non-degeneracy and semiunitarity properties.  Point-set fragments bridge back
into the orthogonality-space world via make_projective_fragment.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .core import OrthoSpace, new_space
from .errors import (
    DegenerateDirection,
    DimensionMismatch,
    EqualPoints,
    IsotropicVector,
    NotInModuleFV,
    StarIncompatiblePlace,
    Unordered,
    UnsupportedField,
)
from .scalars import (
    Field,
    GaloisField,
    IdentityPlace,
    PAdicPlace,
    Place,
    Rationals,
    RatFunc,
    RatFuncLimitPlace,
    Scalar,
    common_scale,
    star_compatibility_check,
)

Vector = tuple[Scalar, ...]


def parse_vector(field: Field, text: str) -> Vector:
    """Comma-separated scalar literals, optionally wrapped in brackets."""
    body = text.strip()
    if body and body[0] in "([" and body[-1] in ")]":
        body = body[1:-1]
    return tuple(field.parse(part) for part in body.split(","))


def format_vector(v: Vector) -> str:
    return "(" + ":".join(str(c) for c in v) + ")"


@dataclass(frozen=True)
class HermitianSpace:
    """A dimension and a Hermitian Gram matrix over a star-field.

    The matrix must satisfy gram[i][j] = star(gram[j][i]).  Positive
    definiteness is declared at construction and verified through the signs
    of the leading principal minors; it requires an ordered field and is the
    anisotropy mechanism used for point constructions.
    """

    field: Field
    dim: int
    gram: tuple[tuple[Scalar, ...], ...]
    positive_definite: bool = False

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise DimensionMismatch("dimension must be at least 1")
        if len(self.gram) != n or any(len(row) != n for row in self.gram):
            raise DimensionMismatch("Gram matrix shape does not match the dimension")
        for i in range(n):
            for j in range(n):
                if self.gram[i][j] != self.field.star(self.gram[j][i]):
                    raise ValueError("Gram matrix is not Hermitian-symmetric")
        if self.positive_definite:
            if not self.field.ordered:
                raise Unordered("positive definiteness needs an ordered field")
            for k in range(1, n + 1):
                minor = [[self.gram[i][j] for j in range(k)] for i in range(k)]
                if self.field.sign(_determinant(self.field, minor)) <= 0:
                    raise ValueError("a leading principal minor is not positive")

    @classmethod
    def standard(cls, field: Field, dim: int, positive_definite: bool | None = None,
                 scale: Scalar | None = None) -> "HermitianSpace":
        """The standard form (optionally scaled by a star-fixed scalar)."""
        one = scale if scale is not None else field.one
        zero = field.zero
        gram = tuple(tuple(one if i == j else zero for j in range(dim)) for i in range(dim))
        if positive_definite is None:
            positive_definite = field.ordered
        return cls(field, dim, gram, positive_definite)

    def zero_vector(self) -> Vector:
        return tuple(self.field.zero for _ in range(self.dim))

    def basis_vector(self, i: int) -> Vector:
        return tuple(self.field.one if j == i else self.field.zero for j in range(self.dim))

    def coerce_vector(self, v: Sequence) -> Vector:
        if len(v) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {len(v)}")
        return tuple(self.field.coerce(c) for c in v)


def _determinant(field: Field, rows: list[list[Scalar]]) -> Scalar:
    """Exact determinant by Gaussian elimination with division."""
    n = len(rows)
    rows = [list(r) for r in rows]
    det = field.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return field.zero
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det = det * rows[col][col]
        inv = field.inv(rows[col][col])
        for r in range(col + 1, n):
            if rows[r][col]:
                factor = rows[r][col] * inv
                rows[r] = [rows[r][j] - factor * rows[col][j] for j in range(n)]
    return det


def inner(space: HermitianSpace, x: Sequence, y: Sequence) -> Scalar:
    """<x, y> = sum_i sum_j x_i gram[i][j] star(y_j)."""
    x = space.coerce_vector(x)
    y = space.coerce_vector(y)
    field = space.field
    total = field.zero
    for j, yj in enumerate(y):
        if not yj:
            continue
        sy = field.star(yj)
        for i, xi in enumerate(x):
            if xi and space.gram[i][j]:
                total = total + xi * space.gram[i][j] * sy
    return total


@dataclass(frozen=True)
class ProjPoint:
    """A one-dimensional subspace, canonicalised so the first nonzero
    coordinate is 1; equality and hashing are structural."""

    space: HermitianSpace
    coords: Vector

    def __init__(self, space: HermitianSpace, coords: Sequence):
        coords = space.coerce_vector(coords)
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise ValueError("a projective point needs a nonzero vector")
        inv = space.field.inv(lead)
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "coords", tuple(inv * c for c in coords))

    def __str__(self):
        return format_vector(self.coords)


def point_orth(space: HermitianSpace, p: ProjPoint, q: ProjPoint) -> bool:
    return not inner(space, p.coords, q.coords)


# -- exact linear algebra over a field ------------------------------------------


def _rref(field: Field, rows: list[Vector]) -> list[Vector]:
    """Reduced row echelon form; the nonzero rows are a canonical basis."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    pivot_row = 0
    for col in range(ncols):
        r = next((k for k in range(pivot_row, len(rows)) if rows[k][col]), None)
        if r is None:
            continue
        rows[pivot_row], rows[r] = rows[r], rows[pivot_row]
        inv = field.inv(rows[pivot_row][col])
        rows[pivot_row] = [inv * c for c in rows[pivot_row]]
        for k in range(len(rows)):
            if k != pivot_row and rows[k][col]:
                f = rows[k][col]
                rows[k] = [rows[k][j] - f * rows[pivot_row][j] for j in range(ncols)]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return [tuple(r) for r in rows[:pivot_row] if any(r)]


def subspace_span(space: HermitianSpace, vectors: Sequence[Sequence]) -> list[Vector]:
    """A canonical (reduced echelon) basis of the span."""
    return _rref(space.field, [space.coerce_vector(v) for v in vectors])


def subspace_orthocomplement(space: HermitianSpace, basis: Sequence[Sequence]) -> list[Vector]:
    """Canonical basis of { x : <x, b> = 0 for all b in the given basis }."""
    field = space.field
    n = space.dim
    basis = [space.coerce_vector(b) for b in basis]
    constraints = []
    for b in basis:
        sb = [field.star(c) for c in b]
        constraints.append(tuple(
            sum((space.gram[i][j] * sb[j] for j in range(n) if sb[j]), field.zero)
            for i in range(n)
        ))
    reduced = _rref(field, constraints)
    pivots = []
    for row in reduced:
        pivots.append(next(j for j, c in enumerate(row) if c))
    free = [j for j in range(n) if j not in pivots]
    out = []
    for j in free:
        vec = [field.zero] * n
        vec[j] = field.one
        for row, pc in zip(reduced, pivots):
            if row[j]:
                vec[pc] = -row[j]
        out.append(tuple(vec))
    return _rref(field, out)


def rank_of(field: Field, rows: Sequence[Vector]) -> int:
    return len(_rref(field, list(rows)))


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    """Whether the three points lie on a projective line (rank <= 2)."""
    if not (p.space is q.space or p.space == q.space) or not (p.space == r.space):
        raise DimensionMismatch("points live in different spaces")
    return rank_of(p.space.field, [p.coords, q.coords, r.coords]) <= 2


def linearity_witness(space: HermitianSpace, e: ProjPoint, f: ProjPoint) -> ProjPoint:
    """The third point g with {e,f}' = {e,g}' and exactly one of f, g
    orthogonal to e: the Gram-Schmidt step when e and f are not orthogonal,
    and e + f when they are.  The defining conditions are re-verified."""
    if e.coords == f.coords:
        raise EqualPoints("linearity witness needs two distinct points")
    field = space.field
    ef = inner(space, f.coords, e.coords)
    if ef:
        factor = ef / inner(space, e.coords, e.coords)
        g_vec = tuple(fc - factor * ec for fc, ec in zip(f.coords, e.coords))
    else:
        g_vec = tuple(fc + ec for fc, ec in zip(f.coords, e.coords))
    g = ProjPoint(space, g_vec)
    assert (not inner(space, g.coords, e.coords)) != (not ef), "exactly-one condition failed"
    left = subspace_orthocomplement(space, [e.coords, f.coords])
    right = subspace_orthocomplement(space, [e.coords, g.coords])
    assert left == right, "complement equality failed"
    return g


# -- generalised semilinear maps --------------------------------------------------


@dataclass(frozen=True)
class GenSemilinearMap:
    """x -> matrix . (rho applied coordinatewise), defined on the module F_V
    of vectors with all canonical coordinates in the valuation ring.

    The matrix columns are the images of the source basis; no column may be
    zero, which is the canonical-direction part of the condition that every
    one-dimensional subspace contain a vector with nonzero image.  The
    sampled part of that condition is covered by verify_direction_condition.
    """

    place: Place
    matrix: tuple[tuple[Scalar, ...], ...]  # target-dim rows x source-dim cols
    source: HermitianSpace
    target: HermitianSpace

    def __post_init__(self):
        if self.place.source != self.source.field or self.place.target != self.target.field:
            raise DimensionMismatch("place endpoints must match the space fields")
        if len(self.matrix) != self.target.dim or any(len(r) != self.source.dim for r in self.matrix):
            raise DimensionMismatch("matrix shape must be target.dim x source.dim")
        for col in range(self.source.dim):
            if not any(row[col] for row in self.matrix):
                raise DegenerateDirection(f"matrix column {col} is zero")


def semilinear_apply(m: GenSemilinearMap, x: Sequence) -> Vector:
    """Requires every coordinate in the valuation ring (x in F_V)."""
    x = m.source.coerce_vector(x)
    for i, c in enumerate(x):
        if not m.place.contains(c):
            raise NotInModuleFV(f"coordinate {i} is outside the valuation ring")
    reduced = [m.place.apply(c) for c in x]
    field = m.target.field
    return tuple(
        sum((row[j] * reduced[j] for j in range(m.source.dim) if reduced[j]), field.zero)
        for row in m.matrix
    )


def induced_projective_map(m: GenSemilinearMap, p: ProjPoint) -> ProjPoint:
    """<x> -> <A(x)> on a representative rescaled into F_V with a unit
    coordinate; independent of the representative."""
    alpha = common_scale(m.place, list(p.coords))
    inv = m.source.field.inv(alpha)
    rep = tuple(inv * c for c in p.coords)
    image = semilinear_apply(m, rep)
    if not any(image):
        raise DegenerateDirection(f"every F_V representative of {p} maps to zero")
    return ProjPoint(m.target, image)


def _random_ring_vector(m: GenSemilinearMap, rng) -> Vector:
    return tuple(m.place.ring_samples(rng, m.source.dim))


def _random_unit(place: Place, rng) -> Scalar:
    while True:
        a = place.ring_samples(rng, 1)[0]
        if place.is_unit(a):
            return a


@dataclass(frozen=True)
class LineationReport:
    samples: int
    degenerate: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def check_lineation(m: GenSemilinearMap, samples: int = 1000, seed: int = 0) -> LineationReport:
    """Sample collinear triples x, y, z = a*x + b*y with F_V representatives
    and check that the image points are collinear, in the strong form: when
    the images of x and y differ, the image of z lies on their line.  Any
    violation is a bug, so it is reported rather than raised."""
    rng = random.Random(seed)
    violations = []
    degenerate = 0
    for _ in range(samples):
        x = _random_ring_vector(m, rng)
        y = _random_ring_vector(m, rng)
        if not any(x) or not any(y):
            degenerate += 1
            continue
        a, b = m.place.ring_samples(rng, 2)
        z = tuple(a * xc + b * yc for xc, yc in zip(x, y))
        if not any(z):
            degenerate += 1
            continue
        px, py, pz = (ProjPoint(m.source, v) for v in (x, y, z))
        try:
            ix, iy, iz = (induced_projective_map(m, p) for p in (px, py, pz))
        except DegenerateDirection:
            degenerate += 1
            continue
        if ix.coords == iy.coords:
            degenerate += 1
            continue
        if rank_of(m.target.field, [ix.coords, iy.coords, iz.coords]) > 2:
            violations.append((px, py, pz))
    return LineationReport(samples, degenerate, tuple(violations))


def check_representative_independence(m: GenSemilinearMap, samples: int = 1000, seed: int = 0) -> int:
    """Rescale random points by random valuation units and count image
    mismatches (zero expected)."""
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        x = _random_ring_vector(m, rng)
        if not any(x):
            continue
        u = _random_unit(m.place, rng)
        p = ProjPoint(m.source, x)
        q = ProjPoint(m.source, tuple(u * c for c in x))
        if induced_projective_map(m, p).coords != induced_projective_map(m, q).coords:
            bad += 1
    return bad


@dataclass(frozen=True)
class NondegeneracyReport:
    l3: bool
    l2_evidence: bool
    l2_pairs_checked: int
    l2_failures: tuple

    @property
    def l2(self) -> bool:
        return self.l2_evidence


def check_nondegeneracy(m: GenSemilinearMap, samples: int = 40, seed: int = 0) -> NondegeneracyReport:
    """(L3) exactly: some three pairwise-orthogonal basis directions have
    independent images.  (L2) by evidence: every sampled independent pair
    must yield at least three distinct image points on its line."""
    field = m.target.field
    n = m.source.dim
    cols = [tuple(row[j] for row in m.matrix) for j in range(n)]
    l3 = False
    for i in range(n):
        for j in range(i + 1, n):
            if inner(m.source, m.source.basis_vector(i), m.source.basis_vector(j)):
                continue
            for k in range(j + 1, n):
                if inner(m.source, m.source.basis_vector(i), m.source.basis_vector(k)):
                    continue
                if inner(m.source, m.source.basis_vector(j), m.source.basis_vector(k)):
                    continue
                if rank_of(field, [cols[i], cols[j], cols[k]]) == 3:
                    l3 = True
                    break
            if l3:
                break
        if l3:
            break

    rng = random.Random(seed)
    failures = []
    pairs = 0
    while pairs < samples:
        x = _random_ring_vector(m, rng)
        y = _random_ring_vector(m, rng)
        if not any(x) or not any(y):
            continue
        if rank_of(m.source.field, [x, y]) < 2:
            continue
        pairs += 1
        images = set()
        try:
            images.add(induced_projective_map(m, ProjPoint(m.source, x)).coords)
            images.add(induced_projective_map(m, ProjPoint(m.source, y)).coords)
            for _ in range(24):
                c = m.place.ring_samples(rng, 1)[0]
                z = tuple(xc + c * yc for xc, yc in zip(x, y))
                if any(z):
                    images.add(induced_projective_map(m, ProjPoint(m.source, z)).coords)
                if len(images) >= 3:
                    break
        except DegenerateDirection:
            pass
        if len(images) < 3:
            failures.append((x, y))
    return NondegeneracyReport(l3, not failures, pairs, tuple(failures))


def verify_direction_condition(m: GenSemilinearMap, samples: int = 100, seed: int = 0) -> bool:
    """Sampled part of condition (i): random directions keep a representative
    with nonzero image.  The canonical directions are checked at
    construction; exactness over infinite fields is out of reach, so this is
    explicitly a partial check."""
    rng = random.Random(seed)
    for _ in range(samples):
        x = _random_ring_vector(m, rng)
        if not any(x):
            continue
        try:
            induced_projective_map(m, ProjPoint(m.source, x))
        except DegenerateDirection:
            return False
    return True


@dataclass(frozen=True)
class SemiunitaryCertificate:
    """The pair (lambda, lambda') in <U(x), U(y)> = rho(<x,y> lambda) lambda'."""

    lam: Scalar
    lam_prime: Scalar


def canonical_certificate_from_basis(m: GenSemilinearMap, basis: Sequence[Sequence]) -> SemiunitaryCertificate:
    """lambda = <b1,b1>**-1 and lambda' = <U(b1),U(b1)> for an orthogonal
    basis of equal-length vectors inside F_H minus I_H (all verified)."""
    basis = [m.source.coerce_vector(b) for b in basis]
    if len(basis) != m.source.dim:
        raise DimensionMismatch("need a full basis")
    if rank_of(m.source.field, basis) != m.source.dim:
        raise DimensionMismatch("basis vectors are dependent")
    lengths = [inner(m.source, b, b) for b in basis]
    if any(length != lengths[0] for length in lengths):
        raise ValueError("basis vectors must have equal length")
    for i, b in enumerate(basis):
        for j in range(i + 1, len(basis)):
            if inner(m.source, b, basis[j]):
                raise ValueError("basis must be orthogonal")
        image = semilinear_apply(m, b)
        if not any(image):
            raise DegenerateDirection(f"basis vector {i} lies in I_H")
    u0 = semilinear_apply(m, basis[0])
    return SemiunitaryCertificate(m.source.field.inv(lengths[0]), inner(m.target, u0, u0))


def semiunitary_check(m: GenSemilinearMap, cert: SemiunitaryCertificate,
                      samples: int = 1000, seed: int = 0,
                      equal_length_basis: Sequence[Sequence] | None = None) -> bool:
    """<U(x),U(y)> = rho(<x,y> lambda) lambda' on sampled x, y in F_V.

    When an equal-length orthogonal basis is supplied, the canonical
    certificate it induces is validated on the same samples as well.
    """
    if not star_compatibility_check(m.place):
        raise StarIncompatiblePlace("the place does not commute with the stars")
    certs = [cert]
    if equal_length_basis is not None:
        certs.append(canonical_certificate_from_basis(m, equal_length_basis))
    rng = random.Random(seed)
    for _ in range(samples):
        x = _random_ring_vector(m, rng)
        y = _random_ring_vector(m, rng)
        ux = semilinear_apply(m, x)
        uy = semilinear_apply(m, y)
        lhs = inner(m.target, ux, uy)
        base = inner(m.source, x, y)
        for c in certs:
            if not m.place.contains(base * c.lam):
                return False
            if lhs != m.place.apply(base * c.lam) * c.lam_prime:
                return False
    return True


# -- projective fragments ---------------------------------------------------------


def make_projective_fragment(space: HermitianSpace, vectors: Sequence[Sequence]) -> OrthoSpace:
    """The finite orthogonality space on the given rays, with p _|_ q iff
    their inner product vanishes.  Labels are the canonical coordinates, so
    they are distinct and self-describing.

    Isotropic inputs are rejected; over finite fields only dimension 1 is
    allowed, since anisotropy fails from dimension 2 on.
    """
    if isinstance(space.field, GaloisField) and space.dim >= 2:
        raise UnsupportedField("finite-field fragments of dimension >= 2 have isotropic vectors")
    points: list[ProjPoint] = []
    seen = set()
    for v in vectors:
        p = ProjPoint(space, v)
        if not inner(space, p.coords, p.coords):
            raise IsotropicVector(f"{p} is orthogonal to itself")
        if p.coords not in seen:
            seen.add(p.coords)
            points.append(p)
    labels = [str(p) for p in points]
    edges = []
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if point_orth(space, points[i], points[j]):
                edges.append((labels[i], labels[j]))
    return new_space(len(points), edges, labels)


# -- the two reduction demos -------------------------------------------------------


def ratfunc_reduction_map(dim: int = 3) -> GenSemilinearMap:
    """Q(e)^dim -> Q^dim with the evaluation place e -> 0, identity matrix,
    standard forms on both sides."""
    place = RatFuncLimitPlace()
    source = HermitianSpace.standard(RatFunc(), dim, positive_definite=True)
    target = HermitianSpace.standard(Rationals(), dim, positive_definite=True)
    one, zero = Rationals().one, Rationals().zero
    matrix = tuple(tuple(one if i == j else zero for j in range(dim)) for i in range(dim))
    return GenSemilinearMap(place, matrix, source, target)


def padic_reduction_map(p: int = 5, dim: int = 3) -> GenSemilinearMap:
    """Q^dim -> GF(p)^dim with the p-adic place, identity matrix, standard
    forms; the target form is symmetric but carries no order."""
    place = PAdicPlace(p)
    source = HermitianSpace.standard(Rationals(), dim, positive_definite=True)
    gf = place.target
    one, zero = gf.one, gf.zero
    target = HermitianSpace(gf, dim, tuple(tuple(one if i == j else zero for j in range(dim)) for i in range(dim)))
    matrix = tuple(tuple(one if i == j else zero for j in range(dim)) for i in range(dim))
    return GenSemilinearMap(place, matrix, source, target)


def identity_semilinear_map(space: HermitianSpace) -> GenSemilinearMap:
    place = IdentityPlace(space.field)
    one, zero = space.field.one, space.field.zero
    matrix = tuple(tuple(one if i == j else zero for j in range(space.dim)) for i in range(space.dim))
    return GenSemilinearMap(place, matrix, space, space)
