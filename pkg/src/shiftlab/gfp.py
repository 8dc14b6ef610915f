"""Exact dense linear algebra over GF(p).

Matrices are numpy arrays holding integer values reduced mod p.  All
arithmetic is done in float64: entries stay below p < 2**15 and panel
widths are capped so every intermediate product sum stays below 2**53,
hence every operation is exact.

The one primitive everything else uses is :func:`pivot_columns`:
Gaussian elimination with a fixed left-to-right column order, returning
the columns that carry a pivot.  The rank of any column prefix is the
number of pivots inside that prefix.
"""

from __future__ import annotations

import numpy as np

_PANEL = 128


def pivot_columns(mat, p: int) -> list[int]:
    """Pivot columns of ``mat`` under left-to-right elimination mod p.

    Uses delayed ("panel") updates: eliminations are accumulated as a
    rank-k correction F @ R and applied to single columns on demand,
    flushing to the whole trailing matrix via one matrix product every
    _PANEL pivots.  Exactness: entries < p < 2**15, so a panel update
    sums at most _PANEL products each below 2**30 -- well under 2**53.
    """
    M = np.ascontiguousarray(np.asarray(mat, dtype=np.float64) % p)
    m, nc = M.shape
    if m == 0 or nc == 0:
        return []
    pivots: list[int] = []
    eligible = np.ones(m, dtype=bool)
    fcols: list[np.ndarray] = []
    rrows: list[np.ndarray] = []
    F = np.zeros((m, 0))
    R = np.zeros((0, nc))

    for c in range(nc):
        col = M[:, c]
        if fcols:
            col = col - F[:, : len(fcols)] @ R[: len(rrows), c]
            col %= p
        cand = np.nonzero(eligible & (col != 0))[0]
        if cand.size == 0:
            continue
        t = int(cand[0])
        pivots.append(c)
        eligible[t] = False
        row = M[t, :]
        if rrows:
            row = row - F[t, : len(fcols)] @ R[: len(rrows)]
            row %= p
        else:
            row = row.copy()
        inv = pow(int(col[t]), p - 2, p)
        f = (col * inv) % p
        f[~eligible] = 0.0
        fcols.append(f)
        rrows.append(row)
        F = np.column_stack(fcols)
        R = np.vstack(rrows)
        if len(fcols) >= _PANEL:
            M = (M - F @ R) % p
            fcols, rrows = [], []
            F = np.zeros((m, 0))
            R = np.zeros((0, nc))
    return pivots


def rank(mat, p: int) -> int:
    """Rank over GF(p)."""
    return len(pivot_columns(mat, p))


def invertible(mat, p: int) -> bool:
    a = np.asarray(mat)
    return a.shape[0] == a.shape[1] and rank(a, p) == a.shape[0]
