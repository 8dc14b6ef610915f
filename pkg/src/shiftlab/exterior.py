"""Exterior generic initial ideals via exact rank computations mod p.

The generic initial ideal of the exterior face ideal is extracted
degree by degree: apply a random invertible change of coordinates, take
the matrix of the image of the degree-d slice in the monomial basis of
the d-th exterior power (columns sorted revlex-descending), and
row-reduce.  A monomial is in the generic initial ideal exactly when
its column carries a pivot, and the rank of any revlex-upper column
prefix yields the m_<= statistics directly.

The infinite base field is approximated by GF(p) with a uniform random
coordinate change; results are accepted only when two independent draws
agree, which bounds the failure probability by (degree of the relevant
minors)/p per draw.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gfp
from .complexes import (
    STRICT,
    SimplicialComplex,
    f_vector,
    from_faces,
    ideal_degree_slice,
    is_shifted,
)
from .faces import binom, mask_of, members_of, revlex_key

_ROW_BLOCK = 256


class GenericityError(RuntimeError):
    """Independent coordinate draws disagreed; p too small or draws unlucky."""


@dataclass(frozen=True)
class GenericMatrix:
    """An invertible n x n matrix over GF(p) together with its seed."""

    n: int
    p: int
    seed: int
    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", np.asarray(self.entries, dtype=np.int64))


def random_gl(n: int, p: int, seed: int) -> GenericMatrix:
    """Uniform random invertible matrix over GF(p); resamples until invertible."""
    rng = np.random.default_rng(seed)
    while True:
        g = rng.integers(0, p, size=(n, n), dtype=np.int64)
        if gfp.invertible(g, p):
            return GenericMatrix(n, p, seed, g)


@lru_cache(maxsize=None)
def _combo_order(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Degree-d supports as sorted tuples, in itertools (lex) order."""
    return tuple(itertools.combinations(range(1, n + 1), d))


@lru_cache(maxsize=None)
def _wedge_step(n: int, k: int):
    """Scatter tables for one wedge step from degree k to k+1.

    For each (k+1)-combo c' (in _combo_order) and each position q of an
    element e in c', the contribution is sign * cur[c' - e] * row[e],
    sign = (-1)^(k - q).  Returns (old_idx, elem_idx, sign, offsets)
    where entries are grouped per target combo for np.add.reduceat.
    """
    small = {c: idx for idx, c in enumerate(_combo_order(n, k))}
    old_idx, elem_idx, signs = [], [], []
    for combo in _combo_order(n, k + 1):
        for q, e in enumerate(combo):
            rest = combo[:q] + combo[q + 1 :]
            old_idx.append(small[rest])
            elem_idx.append(e - 1)
            signs.append((-1) ** (k - q))
    offsets = np.arange(0, len(old_idx), k + 1)
    return (
        np.asarray(old_idx, dtype=np.intp),
        np.asarray(elem_idx, dtype=np.intp),
        np.asarray(signs, dtype=np.float64),
        offsets,
    )


@lru_cache(maxsize=None)
def revlex_column_order(n: int, d: int) -> tuple[tuple[int, ...], np.ndarray]:
    """Degree-d face masks sorted revlex-descending, plus the permutation
    taking _combo_order positions to that order."""
    combos = _combo_order(n, d)
    masks = [mask_of(c) for c in combos]
    order = sorted(range(len(masks)), key=lambda q: revlex_key(masks[q]))
    perm = np.asarray(order, dtype=np.intp)
    return tuple(masks[q] for q in order), perm


def phi_image_matrix(cx: SimplicialComplex, d: int, phi: GenericMatrix) -> tuple[np.ndarray, tuple[int, ...]]:
    """Matrix of the transformed degree-d slice in the monomial basis.

    Row r holds the coefficients of the image of the r-th slice
    monomial: the coefficient on column tau is the d x d minor of phi
    with rows sigma_r and columns tau.  Columns are sorted
    revlex-descending; returns (matrix, column masks).
    """
    if not 1 <= d <= cx.n:
        raise ValueError("degree out of range")
    n, p = cx.n, phi.p
    slice_masks = sorted(ideal_degree_slice(cx, d).monomials, key=revlex_key)
    col_masks, perm = revlex_column_order(n, d)
    if not slice_masks:
        return np.zeros((0, len(col_masks)), dtype=np.int64), col_masks

    G = (phi.entries % p).astype(np.float64)
    sigmas = np.asarray([members_of(m) for m in slice_masks], dtype=np.intp)
    rows_out = np.empty((len(slice_masks), len(col_masks)), dtype=np.float64)

    for lo in range(0, len(slice_masks), _ROW_BLOCK):
        hi = min(lo + _ROW_BLOCK, len(slice_masks))
        block = sigmas[lo:hi]
        cur = np.ones((hi - lo, 1), dtype=np.float64)
        for k in range(d):
            old_idx, elem_idx, signs, offsets = _wedge_step(n, k)
            rows_k = G[block[:, k] - 1, :]  # (B, n)
            contrib = cur[:, old_idx] * rows_k[:, elem_idx] * signs
            cur = np.add.reduceat(contrib, offsets, axis=1) % p
        rows_out[lo:hi] = cur

    M = rows_out[:, perm]
    return M.astype(np.int64), col_masks


def _gin_nonfaces_once(cx: SimplicialComplex, p: int, phi: GenericMatrix) -> dict[int, frozenset[int]]:
    """Non-face masks of the generic initial complex, per degree."""
    n = cx.n
    out: dict[int, frozenset[int]] = {}
    for d in range(1, n + 1):
        slice_d = ideal_degree_slice(cx, d).monomials
        total = binom(n, d)
        if not slice_d:
            out[d] = frozenset()
        elif len(slice_d) == total:
            out[d] = frozenset(slice_d)
        else:
            M, col_masks = phi_image_matrix(cx, d, phi)
            pivots = gfp.pivot_columns(M, p)
            out[d] = frozenset(col_masks[c] for c in pivots)
            assert len(out[d]) == len(slice_d), "pivot count must equal slice dimension"
    return out


def _complex_from_nonfaces(n: int, nonfaces: dict[int, frozenset[int]]) -> SimplicialComplex:
    bad = set().union(*nonfaces.values()) if nonfaces else set()
    faces = [m for d in range(n + 1) for m in map(mask_of, _combo_order(n, d)) if m not in bad]
    return from_faces(n, faces, STRICT)


def gin(cx: SimplicialComplex, p: int = 32003, seed: int = 1, retries: int = 3) -> SimplicialComplex:
    """The exterior algebraic shifted complex (generic initial complex).

    Runs the degreewise pivot extraction for two independent coordinate
    draws and requires agreement; retries with fresh seeds on
    disagreement.  The result is asserted shifted with the f-vector of
    the input.
    """
    if cx.mode != STRICT:
        raise ValueError("gin requires a strict-mode complex")
    for attempt in range(retries):
        s1 = seed + 1_000_003 * attempt
        s2 = s1 + 7919
        nf1 = _gin_nonfaces_once(cx, p, random_gl(cx.n, p, s1))
        nf2 = _gin_nonfaces_once(cx, p, random_gl(cx.n, p, s2))
        if nf1 == nf2:
            result = _complex_from_nonfaces(cx.n, nf1)
            if not is_shifted(result):
                raise GenericityError("generic initial complex failed shiftedness check")
            if f_vector(result) != f_vector(cx):
                raise GenericityError("generic initial complex changed the f-vector")
            return result
    raise GenericityError(f"seed disagreement persisted across {retries} attempts")


def m_leq_via_rank(
    cx: SimplicialComplex, i: int, d: int, p: int = 32003, seed: int = 1
) -> int:
    """m_<=i of the generic initial ideal in degree d, by a rank computation.

    The columns revlex-above the window face {i-d+1, ..., i} are exactly
    those with largest index <= i, i.e. the first C(i,d) columns of the
    revlex-descending order; the rank of that prefix equals the number
    of pivots falling inside it.
    """
    if not 1 <= d <= cx.n:
        raise ValueError("degree out of range")
    if i < d:
        return 0
    slice_d = ideal_degree_slice(cx, d).monomials
    if not slice_d:
        return 0
    prefix = binom(i, d)
    if len(slice_d) == binom(cx.n, d):
        # full slice: matrix is a basis change, rank of prefix = prefix width
        return prefix
    M, _ = phi_image_matrix(cx, d, random_gl(cx.n, p, seed))
    pivots = gfp.pivot_columns(M, p)
    return sum(1 for c in pivots if c < prefix)
