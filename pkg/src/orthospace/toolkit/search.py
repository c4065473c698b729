"""Search for spaces with prescribed classification behaviour.

The census is exhaustive up to MAX_CENSUS_N, so within that range the hit is
the smallest possible.  Two of the predicates have no instance in that range
(verified by a full scan; see scripts/find_special_spaces.py), so the search
falls back to a catalogue of constructed instances beyond it.
"""

from __future__ import annotations

from typing import Callable

from ..classify import is_dacey, is_normal_fast, subspace
from ..core import OrthoSpace, Subset
from ..errors import BadParameter, NotFoundWithinBound
from ..lattice import build_lattice
from ..morphisms import inclusion, is_normal_hom
from .census import MAX_CENSUS_N, census_classes
from .generators import triad_square, twin_squares

PREDICATES = ("normal_not_dacey", "normal_with_nonnormal_subspace", "nonnormal_inclusion")


def _normal_not_dacey(space: OrthoSpace) -> bool:
    return bool(is_normal_fast(space)) and not is_dacey(space)


def _normal_with_nonnormal_subspace(space: OrthoSpace) -> bool:
    if not is_normal_fast(space):
        return False
    for mask in build_lattice(space).elements:
        if mask == 0:
            continue
        if not is_normal_fast(subspace(space, Subset(space, mask))):
            return True
    return False


def _nonnormal_inclusion(space: OrthoSpace) -> bool:
    """A normal space with a normal orthoclosed subspace whose inclusion is
    not a normal homomorphism."""
    if not is_normal_fast(space):
        return False
    for mask in build_lattice(space).elements:
        if mask == 0:
            continue
        sub = subspace(space, Subset(space, mask))
        if is_normal_fast(sub) and not is_normal_hom(inclusion(sub, space)):
            return True
    return False


_TESTS: dict[str, Callable[[OrthoSpace], bool]] = {
    "normal_not_dacey": _normal_not_dacey,
    "normal_with_nonnormal_subspace": _normal_with_nonnormal_subspace,
    "nonnormal_inclusion": _nonnormal_inclusion,
}

# Constructed instances for predicates with no census-range hit.  A full scan
# of all isomorphism classes with n <= 7 found none, so these are served once
# the census range is exhausted; beyond that range minimality is not claimed.
_CATALOGUE: dict[str, Callable[[], OrthoSpace]] = {
    "normal_not_dacey": triad_square,
    "nonnormal_inclusion": triad_square,
    "normal_with_nonnormal_subspace": twin_squares,
}


def search_fixture(predicate: str, max_n: int = 12) -> OrthoSpace:
    """Smallest census space satisfying ``predicate``; falls back to the
    constructed catalogue when the census range has no hit.  Raises
    NotFoundWithinBound if nothing at most max_n qualifies."""
    try:
        test = _TESTS[predicate]
    except KeyError:
        raise BadParameter(f"unknown predicate {predicate!r}; choose from {PREDICATES}") from None
    for n in range(1, min(max_n, MAX_CENSUS_N) + 1):
        for space in census_classes(n):
            if test(space):
                return space
    if max_n > MAX_CENSUS_N:
        candidate = _CATALOGUE[predicate]()
        if candidate.n <= max_n:
            assert test(candidate)
            return candidate
    raise NotFoundWithinBound(f"no space with at most {max_n} elements satisfies {predicate!r}")
