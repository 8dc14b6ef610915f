import json

import pytest

from shiftlab import (
    f_vector,
    from_facets,
    from_faces,
    from_json,
    full_simplex,
    ideal_degree_slice,
    ideal_slices,
    is_shifted,
    m_leq,
    mask_of,
    members_of,
    minimal_nonfaces,
    restriction,
    to_json,
)
from shiftlab.complexes import RELAXED, STRICT

from support import all_strict_complexes, brute_is_shifted


def faces_as_sets(cx):
    return {members_of(f) for f in cx.faces}


def test_from_facets_closure():
    cx = from_facets(3, [[1, 2], [1, 3]])
    assert faces_as_sets(cx) == {(), (1,), (2,), (3,), (1, 2), (1, 3)}


def test_from_facets_singletons():
    cx = from_facets(2, [[1], [2]])
    assert faces_as_sets(cx) == {(), (1,), (2,)}


def test_strict_mode_missing_singleton():
    with pytest.raises(ValueError):
        from_facets(3, [[1, 2]])
    # relaxed mode allows it
    cx = from_facets(3, [[1, 2]], mode=RELAXED)
    assert mask_of([3]) not in cx.faces


def test_facet_out_of_range():
    with pytest.raises(ValueError):
        from_facets(3, [[1, 4]])


def test_from_faces_rejects_open_family():
    with pytest.raises(ValueError):
        from_faces(3, [mask_of([1]), mask_of([2]), mask_of([3]), mask_of([1, 2, 3])])


def test_f_vector():
    assert f_vector(from_facets(3, [[1, 2], [1, 3]])) == (3, 2)
    assert f_vector(full_simplex(3)) == (3, 3, 1)


def test_restriction():
    cyc = from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
    r = restriction(cyc, [1, 3])
    assert r.mode == RELAXED
    assert faces_as_sets(r) == {(), (1,), (3,)}
    assert faces_as_sets(restriction(cyc, [])) == {()}
    cx = from_facets(3, [[1, 2], [1, 3]])
    assert faces_as_sets(restriction(cx, [2, 3])) == {(), (2,), (3,)}


def test_restriction_full_ground_set_is_identity():
    cx = from_facets(4, [[1, 2, 3], [2, 4]])
    assert restriction(cx, range(1, 5)).faces == cx.faces


def test_is_shifted():
    assert is_shifted(from_facets(3, [[1, 3], [2, 3]]))
    assert not is_shifted(from_facets(3, [[1, 2], [1, 3]]))
    assert is_shifted(full_simplex(4))


def test_is_shifted_matches_brute_force():
    for cx in all_strict_complexes(4):
        assert is_shifted(cx) == brute_is_shifted(cx)


def test_minimal_nonfaces():
    cyc = from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
    assert [members_of(m) for m in minimal_nonfaces(cyc)] == [(1, 3), (2, 4)]
    assert minimal_nonfaces(full_simplex(3)) == []
    assert [members_of(m) for m in minimal_nonfaces(from_facets(3, [[1, 3], [2, 3]]))] == [(1, 2)]


def test_ideal_degree_slice():
    cyc = from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
    assert {members_of(m) for m in ideal_degree_slice(cyc, 2).monomials} == {(1, 3), (2, 4)}
    assert len(ideal_degree_slice(cyc, 3).monomials) == 4
    assert ideal_degree_slice(full_simplex(4), 3).monomials == frozenset()


def test_m_leq_example():
    # ideal (x1x2, x1x3) on the complex with facets {1,4}, {2,3,4}
    cx = from_facets(4, [[1, 4], [2, 3, 4]])
    slices = ideal_slices(cx)
    assert m_leq(slices, 2, 2) == 1
    assert m_leq(slices, 3, 2) == 2
    assert m_leq(slices, 4, 2) == 2
    assert m_leq(slices, 1, 2) == 0  # i < d


def test_subset_count_identity():
    for cx in all_strict_complexes(4):
        total = sum(len(ideal_degree_slice(cx, d).monomials) for d in range(cx.n + 1))
        total += sum(f_vector(cx)) + 1
        assert total == 2**cx.n


def test_downward_closure_after_construction():
    cx = from_facets(5, [[1, 2, 3], [3, 4, 5], [2, 4]])
    for f in cx.faces:
        for v in members_of(f):
            assert f & ~(1 << (v - 1)) in cx.faces


def test_json_roundtrip():
    cx = from_facets(4, [[1, 2, 3], [2, 4]])
    doc = json.loads(to_json(cx))
    assert doc["n"] == 4 and doc["mode"] == STRICT
    again = from_json(to_json(cx))
    assert again.faces == cx.faces and again.n == cx.n and again.mode == cx.mode


def test_ground_set_cap():
    with pytest.raises(ValueError):
        from_facets(65, [[1]])
