"""The lexsegment complex with a prescribed f-vector.

For each cardinality d the non-faces are the lex-greatest d-subsets,
as many as the f-vector dictates; equivalently, the ideal side is a
lex-initial segment per degree under x_1 > ... > x_n.
"""

from __future__ import annotations

import itertools

from .complexes import STRICT, SimplicialComplex, f_vector, from_faces, is_shifted
from .faces import binom, mask_of


def delta_lex(f: tuple[int, ...], n: int) -> SimplicialComplex:
    """Unique lexsegment complex on [n] with f-vector ``f``.

    ``f`` must be realizable (in practice it always comes from an
    actual complex); an unrealizable vector trips the closure check.
    """
    faces = [0]
    for d in range(1, n + 1):
        f_count = f[d - 1] if d - 1 < len(f) else 0
        n_nonfaces = binom(n, d) - f_count
        if n_nonfaces < 0:
            raise ValueError(f"f-vector entry f_{d-1}={f_count} exceeds C({n},{d})")
        # itertools.combinations yields ascending tuples in lex order,
        # which is exactly lex-descending monomial order: the first
        # n_nonfaces subsets are the lex-greatest ones.
        for combo in itertools.islice(itertools.combinations(range(1, n + 1), d), n_nonfaces, None):
            faces.append(mask_of(combo))
    try:
        cx = from_faces(n, faces, STRICT)
    except ValueError as exc:
        raise ValueError(f"f-vector is not realizable by a lexsegment complex: {exc}") from exc
    if not is_shifted(cx):
        raise AssertionError("lexsegment complex must be shifted")
    def norm(v):
        v = list(v)
        while v and v[-1] == 0:
            v.pop()
        return tuple(v)

    if norm(f_vector(cx)) != norm(f):
        raise AssertionError(f"f-vector mismatch: wanted {f}, built {f_vector(cx)}")
    return cx
