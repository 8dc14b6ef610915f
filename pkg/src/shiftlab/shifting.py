"""Combinatorial shifting: the Erdos-Ko-Rado exchange operator.

``shift_ij`` replaces i by j (i < j) in every face whose exchanged image
is not already a face.  Iterating such steps until the complex is
shifted produces a combinatorial shifted complex; different step orders
may produce different results, which ``enumerate_shifted`` explores
exhaustively.
"""

from __future__ import annotations

import random
from typing import Iterable, Mapping

from .complexes import STRICT, SimplicialComplex, is_shifted

ShiftSequence = tuple[tuple[int, int], ...]


def _check_pair(n: int, i: int, j: int) -> None:
    if not 1 <= i < j <= n:
        raise ValueError(f"pair ({i},{j}) out of range for n={n}")


def shift_ij(cx: SimplicialComplex, i: int, j: int) -> SimplicialComplex:
    """Apply the exchange operator C_ij to every face.

    C_ij(sigma) = (sigma - i) + j when i is in sigma, j is not, and the
    exchanged set is not already a face; otherwise sigma is kept.
    """
    if cx.mode != STRICT:
        raise ValueError("shifting requires a strict-mode complex")
    _check_pair(cx.n, i, j)
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    out = set()
    for f in cx.faces:
        if f & bi and not f & bj:
            moved = (f & ~bi) | bj
            out.add(moved if moved not in cx.faces else f)
        else:
            out.add(f)
    result = SimplicialComplex(cx.n, frozenset(out), STRICT)
    # downward closure is a theorem for C_ij; assert it cheaply
    assert len(out) == len(cx.faces), "C_ij must be injective on faces"
    return result


def _all_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


def shift_to_shifted(
    cx: SimplicialComplex,
    strategy: str = "sweep",
    seed: int = 0,
    max_steps: int | None = None,
) -> tuple[SimplicialComplex, ShiftSequence]:
    """Iterate shift_ij until the complex is shifted.

    ``sweep`` scans pairs (i,j) in lexicographic order and restarts
    after every change (deterministic).  ``random`` repeatedly applies
    a seeded uniform choice among the pairs that currently change the
    complex.  Returns the shifted complex and the replayable sequence.
    """
    if cx.mode != STRICT:
        raise ValueError("shifting requires a strict-mode complex")
    if max_steps is None:
        max_steps = 10 * cx.n * cx.n * len(cx.faces)
    pairs = _all_pairs(cx.n)
    seq: list[tuple[int, int]] = []
    cur = cx
    steps = 0

    if strategy == "sweep":
        while not is_shifted(cur):
            changed = False
            for i, j in pairs:
                nxt = shift_ij(cur, i, j)
                steps += 1
                if steps > max_steps:
                    raise RuntimeError("shift iteration limit exceeded")
                if nxt.faces != cur.faces:
                    seq.append((i, j))
                    cur = nxt
                    changed = True
                    break
            if not changed:
                break
    elif strategy == "random":
        rng = random.Random(seed)
        while True:
            moves = []
            for i, j in pairs:
                nxt = shift_ij(cur, i, j)
                if nxt.faces != cur.faces:
                    moves.append(((i, j), nxt))
            if not moves:
                break
            (i, j), cur = moves[rng.randrange(len(moves))]
            seq.append((i, j))
            steps += 1
            if steps > max_steps:
                raise RuntimeError("shift iteration limit exceeded")
    else:
        raise ValueError(f"unknown strategy {strategy!r}")

    if not is_shifted(cur):
        raise RuntimeError("shift iteration limit exceeded")
    return cur, tuple(seq)


def replay(cx: SimplicialComplex, seq: Iterable[tuple[int, int]]) -> SimplicialComplex:
    """Apply a recorded shift sequence."""
    cur = cx
    for i, j in seq:
        cur = shift_ij(cur, i, j)
    return cur


def enumerate_shifted(
    cx: SimplicialComplex,
    state_limit: int = 100_000,
    candidate_pairs: list[tuple[int, int]] | None = None,
) -> set[SimplicialComplex]:
    """All shifted complexes reachable from cx by shift_ij steps.

    Breadth-first closure over every intermediate state (a non-shifted
    intermediate may lead to shifted states unreachable otherwise),
    memoized on the exact face-set encoding.  Raises if more than
    ``state_limit`` states are visited.
    """
    if cx.mode != STRICT:
        raise ValueError("shifting requires a strict-mode complex")
    pairs = candidate_pairs if candidate_pairs is not None else _all_pairs(cx.n)
    for i, j in pairs:
        _check_pair(cx.n, i, j)
    start = cx.canonical_key()
    visited = {start: cx}
    frontier = [cx]
    shifted_out: set[SimplicialComplex] = set()
    if is_shifted(cx):
        shifted_out.add(cx)
    while frontier:
        nxt_frontier = []
        for state in frontier:
            for i, j in pairs:
                nxt = shift_ij(state, i, j)
                key = nxt.canonical_key()
                if key in visited:
                    continue
                if len(visited) >= state_limit:
                    raise RuntimeError("enumerate_shifted state limit exceeded")
                visited[key] = nxt
                nxt_frontier.append(nxt)
                if is_shifted(nxt):
                    shifted_out.add(nxt)
        frontier = nxt_frontier
    return shifted_out


def s_ij_zero(
    slices: Mapping[int, frozenset[int]], i: int, j: int
) -> dict[int, frozenset[int]]:
    """The t = 0 exchange map on a family of ideal degree slices.

    For a monomial with j present and i absent whose exchanged support
    (j replaced by i) is NOT in the slice family, the exchange is
    performed; all other monomials are kept.  Note the roles of i and j
    are reversed relative to C_ij: here j is removed and i inserted.
    """
    if not i < j:
        raise ValueError("require i < j")
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    out: dict[int, frozenset[int]] = {}
    for d, mons in slices.items():
        moved = set()
        for m in mons:
            if m & bj and not m & bi:
                img = (m & ~bj) | bi
                moved.add(img if img not in mons else m)
            else:
                moved.add(m)
        out[d] = frozenset(moved)
    return out
