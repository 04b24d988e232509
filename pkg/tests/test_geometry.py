import itertools

import numpy as np
import pytest

from egqldpc.geometry import (
    Line,
    build_geometry,
    cyclic_classes,
    enumerate_lines,
    full_incidence_matrix,
    incidence_vector,
    line_through,
)

from oracles import SlowField, lines_by_pairs

SWEEP = [(2, 2), (2, 3), (2, 4), (3, 2), (4, 2)]


@pytest.fixture(scope="module", params=SWEEP, ids=lambda qm: f"EG({qm[1]},{qm[0]})")
def geom(request):
    q, m = request.param
    return build_geometry(q, m)


# (all, not_origin, through_point) from brute-force pair enumeration
FROZEN_COUNTS = {(2, 2): (6, 3, 3), (2, 3): (28, 21, 7), (2, 4): (120, 105, 15), (3, 2): (12, 8, 4), (4, 2): (20, 15, 5)}


def test_counts_match_pair_oracle(geom):
    q, m = geom.q, geom.m
    slow = SlowField(geom.field.p, geom.field.spec.t, geom.field.spec.modulus)
    oracle = lines_by_pairs(slow, q)
    assert {frozenset(L.points) for L in enumerate_lines(geom)} == oracle
    n_all = len(oracle)
    n_not0 = sum(0 not in L for L in oracle)
    assert (n_all, n_not0) == FROZEN_COUNTS[q, m][:2]
    for pt in geom.points:
        assert len(enumerate_lines(geom, "through_point", point=pt)) == FROZEN_COUNTS[q, m][2]


def test_counts_match_closed_forms(geom):
    q, m = geom.q, geom.m
    assert len(enumerate_lines(geom)) == q ** (m - 1) * (q**m - 1) // (q - 1)
    assert len(enumerate_lines(geom, "not_origin")) == (q ** (m - 1) - 1) * (q**m - 1) // (q - 1)
    assert len(enumerate_lines(geom, "through_point", point=0)) == (q**m - 1) // (q - 1)
    assert geom.point_count == q**m and geom.n == q**m - 1


def test_lines_have_q_points(geom):
    for L in enumerate_lines(geom):
        assert len(L.points) == geom.q
        assert L.through_origin == (0 in L.points)


def test_shift_property(geom):
    for L in enumerate_lines(geom, "not_origin"):
        assert np.array_equal(incidence_vector(geom, geom.scale(L)), np.roll(incidence_vector(geom, L), 1))


def test_parallel_count(geom):
    q, m = geom.q, geom.m
    lines = enumerate_lines(geom)
    f = geom.field

    def direction(L):
        p0 = L.points[0]
        return frozenset(f.sub(x, p0) for x in L.points)

    by_dir = {}
    for L in lines:
        by_dir.setdefault(direction(L), []).append(L)
    for group in by_dir.values():
        for L in group:
            others = [M for M in group if M != L]
            assert all(not set(L.points) & set(M.points) for M in others)
            assert len(others) == q ** (m - 1) - 1


def test_two_points_one_line(geom):
    if geom.point_count > 16:
        pytest.skip("pairwise check kept to small geometries")
    lines = enumerate_lines(geom)
    for a, b in itertools.combinations(geom.points, 2):
        assert sum(a in L and b in L for L in lines) == 1


def test_lines_meet_at_most_once(geom):
    lines = enumerate_lines(geom)
    for L, M in itertools.combinations(lines, 2):
        assert len(set(L.points) & set(M.points)) <= 1


CLASS_SIZES = {(2, 2): [3], (2, 3): [7, 7, 7], (2, 4): [15] * 7, (3, 2): [8], (4, 2): [15]}


def test_cyclic_classes(geom):
    q, m = geom.q, geom.m
    classes = cyclic_classes(geom)
    assert [c.orbit_size for c in classes] == CLASS_SIZES[q, m]
    assert len(classes) == (q ** (m - 1) - 1) // (q - 1)
    members = [L for c in classes for L in c.members]
    assert set(members) == set(enumerate_lines(geom, "not_origin"))
    for c in classes:
        rep = tuple(incidence_vector(geom, c.representative))
        assert rep == min(tuple(incidence_vector(geom, L)) for L in c.members)


def test_line_through_examples():
    g = build_geometry(2, 2)
    L = line_through(g, 1, g.field.alpha_pow(1))
    assert L == Line((1, 2), False)
    g4 = build_geometry(4, 2)
    a5 = g4.field.alpha_pow(5)
    assert line_through(g4, 1, a5).through_origin
    for b in range(1, 16):
        assert line_through(g4, 0, b).through_origin
    with pytest.raises(ValueError):
        line_through(g, 3, 3)


def test_incidence_vector_examples():
    g = build_geometry(2, 2)
    a, a2 = g.field.alpha_pow(1), g.field.alpha_pow(2)
    assert incidence_vector(g, Line.of([a, a2])).tolist() == [0, 1, 1]
    assert incidence_vector(g, Line.of([1, a])).tolist() == [1, 1, 0]
    with pytest.raises(ValueError):
        incidence_vector(g, Line.of([0, 1]))


def test_enumerate_lines_rejects_bad_filter():
    g = build_geometry(2, 2)
    with pytest.raises(ValueError):
        enumerate_lines(g, "parallel")
    with pytest.raises(ValueError):
        enumerate_lines(g, "through_point")


def test_full_incidence_shape():
    g = build_geometry(2, 2)
    h = full_incidence_matrix(g)
    assert h.shape == (6, 4)
    assert set(h.row_weights().tolist()) == {2}
    assert set(h.col_weights().tolist()) == {3}
