"""Simplicial complexes on [n] with full face-set storage.

Complexes are immutable: the face family is a frozenset of bitmasks and
every operation returns a new value, so instances are safe to share
across threads.

Strict mode is the usual convention that every singleton {j}, j in [n],
is a face.  Relaxed mode drops that requirement; it exists so that
induced subcomplexes keep their original labels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .faces import (
    MAX_GROUND_SET,
    all_faces,
    degree,
    mask_of,
    max_index,
    members_of,
    subsets_of,
)

STRICT = "strict"
RELAXED = "relaxed"


@dataclass(frozen=True)
class DegreeSlice:
    """All degree-d monomials of a squarefree monomial ideal."""

    d: int
    monomials: frozenset[int]

    def __post_init__(self):
        for m in self.monomials:
            if degree(m) != self.d:
                raise ValueError("slice member of wrong cardinality")


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    faces: frozenset[int]
    mode: str = STRICT
    _facets: tuple[int, ...] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_GROUND_SET:
            raise ValueError(f"ground-set size must be in 1..{MAX_GROUND_SET}")
        if self.mode not in (STRICT, RELAXED):
            raise ValueError(f"unknown mode {self.mode!r}")

    # -- structure ---------------------------------------------------------

    @property
    def dim(self) -> int:
        """Dimension: max face cardinality minus one (-1 for the empty complex)."""
        return max(degree(f) for f in self.faces) - 1

    def facets(self) -> tuple[int, ...]:
        """Inclusion-maximal faces, sorted by (degree, members)."""
        if self._facets is not None:
            return self._facets
        out = [
            f
            for f in self.faces
            if not any((f | (1 << v)) in self.faces for v in range(self.n) if not f >> v & 1)
        ]
        out.sort(key=lambda m: (degree(m), members_of(m)))
        object.__setattr__(self, "_facets", tuple(out))
        return self._facets

    def __contains__(self, mask: int) -> bool:
        return mask in self.faces

    def canonical_key(self) -> tuple[int, ...]:
        """Exact state identity: the sorted face masks."""
        return tuple(sorted(self.faces))


def _closure(masks: Iterable[int]) -> frozenset[int]:
    closed: set[int] = {0}
    for m in masks:
        if m not in closed:
            closed.update(subsets_of(m))
    return frozenset(closed)


def _validate(n: int, faces: frozenset[int], mode: str) -> None:
    full = (1 << n) - 1
    for f in faces:
        if f & ~full:
            raise ValueError(f"face {members_of(f)} not contained in [{n}]")
    if 0 not in faces:
        raise ValueError("the empty face must be present")
    if mode == STRICT:
        missing = [v for v in range(1, n + 1) if (1 << (v - 1)) not in faces]
        if missing:
            raise ValueError(f"strict mode requires all singletons; missing {missing}")


def from_faces(n: int, faces: Iterable[int], mode: str = STRICT) -> SimplicialComplex:
    """Build a complex from an already downward-closed face family.

    The family is checked for downward closure; use :func:`from_facets`
    to close an arbitrary generating family.
    """
    fam = frozenset(faces) | {0}
    for f in fam:
        for v in range(n):
            if f >> v & 1 and (f & ~(1 << v)) not in fam:
                raise ValueError("face family is not downward-closed")
    _validate(n, fam, mode)
    return SimplicialComplex(n, fam, mode)


def from_facets(n: int, facets: Iterable, mode: str = STRICT) -> SimplicialComplex:
    """Downward closure of the given facets (plus the empty face).

    Facets may be bitmasks or iterables of vertices.
    """
    masks = []
    for f in facets:
        masks.append(f if isinstance(f, int) else mask_of(f))
    faces = _closure(masks)
    _validate(n, faces, mode)
    return SimplicialComplex(n, faces, mode)


def full_simplex(n: int) -> SimplicialComplex:
    return from_facets(n, [(1 << n) - 1])


# -- basic invariants -------------------------------------------------------


def f_vector(cx: SimplicialComplex) -> tuple[int, ...]:
    """(f_0, f_1, ...): f_i counts faces of cardinality i+1."""
    counts: dict[int, int] = {}
    for f in cx.faces:
        d = degree(f)
        if d:
            counts[d] = counts.get(d, 0) + 1
    top = max(counts, default=0)
    return tuple(counts.get(d, 0) for d in range(1, top + 1))


def restriction(cx: SimplicialComplex, w) -> SimplicialComplex:
    """Induced subcomplex on W: faces of cx contained in W, labels kept.

    The result is relaxed-mode since vertices of W need not be faces.
    """
    wmask = w if isinstance(w, int) else mask_of(w)
    faces = frozenset(f for f in cx.faces if f & ~wmask == 0)
    return SimplicialComplex(cx.n, faces, RELAXED)


def is_shifted(cx: SimplicialComplex) -> bool:
    """Whether every face stays a face when any element is raised.

    For each face sigma, each i in sigma and each j > i outside sigma,
    (sigma - i) + j must again be a face.
    """
    if cx.mode != STRICT:
        raise ValueError("shiftedness is defined for strict-mode complexes")
    for f in cx.faces:
        for i in range(cx.n):
            if not f >> i & 1:
                continue
            base = f & ~(1 << i)
            for j in range(i + 1, cx.n):
                if f >> j & 1:
                    continue
                if (base | (1 << j)) not in cx.faces:
                    return False
    return True


def minimal_nonfaces(cx: SimplicialComplex) -> list[int]:
    """Inclusion-minimal non-faces; the generators of I_Delta and J_Delta."""
    out = []
    full = (1 << cx.n) - 1
    for d in range(1, cx.n + 1):
        for mask in all_faces(cx.n, d):
            if mask in cx.faces:
                continue
            if all((mask & ~(1 << v)) in cx.faces for v in range(cx.n) if mask >> v & 1):
                out.append(mask)
    out.sort(key=lambda m: (degree(m), members_of(m)))
    return out


def ideal_degree_slice(cx: SimplicialComplex, d: int) -> DegreeSlice:
    """All d-subsets of [n] that are not faces: the degree-d part of I_Delta."""
    if not 0 <= d <= cx.n:
        raise ValueError("degree out of range")
    mons = frozenset(m for m in all_faces(cx.n, d) if m not in cx.faces)
    return DegreeSlice(d, mons)


def ideal_slices(cx: SimplicialComplex) -> dict[int, frozenset[int]]:
    """Degree slices of I_Delta for every degree 0..n, keyed by degree."""
    out: dict[int, frozenset[int]] = {}
    for d in range(cx.n + 1):
        out[d] = ideal_degree_slice(cx, d).monomials
    return out


def m_leq(slices: Mapping[int, frozenset[int]], i: int, d: int) -> int:
    """Count degree-d ideal monomials whose largest variable index is <= i."""
    if d not in slices:
        return 0
    return sum(1 for m in slices[d] if max_index(m) <= i)


# -- JSON interchange --------------------------------------------------------


def to_json_dict(cx: SimplicialComplex) -> dict:
    return {
        "n": cx.n,
        "facets": [list(members_of(f)) for f in cx.facets()],
        "mode": cx.mode,
    }


def to_json(cx: SimplicialComplex) -> str:
    return json.dumps(to_json_dict(cx))


def from_json_dict(doc: dict) -> SimplicialComplex:
    faces = _closure(mask_of(f) for f in doc["facets"])
    mode = doc.get("mode", STRICT)
    n = doc["n"]
    _validate(n, faces, mode)
    return SimplicialComplex(n, faces, mode)


def from_json(text: str) -> SimplicialComplex:
    return from_json_dict(json.loads(text))
