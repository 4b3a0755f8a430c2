import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from evenwalls.angles import PI, ZERO, Angle, SnapError, oplus, snap
from evenwalls.core import build_complex
from evenwalls.generators import square_grid
from evenwalls.links import LinkPoint, WeightScheme, link
from evenwalls.metric import (
    DirectionInsideCell,
    DirectionsNotComputable,
    InvalidN,
    MirrorNotInCell,
    PreconditionViolated,
    Prediction,
    bounding_cell_criterion,
    composite_angle,
    develop_cell,
    disjointness_predicts,
    project_vertex_to_mirror,
    projection_direction,
)
from evenwalls.walls import build_walls, walls_intersect

from conftest import SMALL, ball, system
from oracles import closed_form_projection, float_projection, split_link_distance

T = WeightScheme.TRUNCATED
QS = (2, 3, 4, 6)


# develop_cell -------------------------------------------------------------
def test_develop_cell_examples():
    c = develop_cell(8, 3)
    assert c.center_angle == Angle(1, 6) and c.vertex_half_angle == Angle(1, 3)
    sq = develop_cell(4, 2)
    assert sq.R_v == pytest.approx(math.sqrt(2) / 2, abs=1e-12)
    assert develop_cell(12, 6).corner_angle == Angle(5, 6)


def test_develop_cell_rejects_bad_parameters():
    with pytest.raises(InvalidN):
        develop_cell(7, 3)
    with pytest.raises(InvalidN):
        develop_cell(8, 5)


@pytest.mark.parametrize("q", QS)
@pytest.mark.parametrize("size", range(4, 25, 2))
def test_triangles_reproduce_exact_angles(size, q):
    c = develop_cell(size, q)
    assert c.total_center_angle == Fraction(size, q)
    for t in range(2 * size):
        a = c.triangle_angles(t)
        assert sum(a) == pytest.approx(math.pi, abs=1e-9)
        assert a[0] == pytest.approx(math.pi / (2 * q), abs=1e-9)
        assert a[1] == pytest.approx((q - 1) * math.pi / (2 * q), abs=1e-9)
        assert a[2] == pytest.approx(math.pi / 2, abs=1e-9)


@pytest.mark.parametrize("size", [6, 8, 12, 20])
def test_six_truncated_triangle_angles(size):
    c = develop_cell(size, 3)
    got = [snap(a, 12) for a in c.triangle_angles(0)]
    assert got == [Fraction(1, 6), Fraction(1, 3), Fraction(1, 2)]


# project_vertex_to_mirror ---------------------------------------------------
@pytest.mark.parametrize("q", QS)
@pytest.mark.parametrize("n", range(2, 13))
def test_projection_matches_oracles(n, q):
    cell = develop_cell(2 * n, q)
    for i in range(n):
        mirror = (i, i + n)
        for vertex in range(2 * n):
            p = project_vertex_to_mirror(cell, vertex, mirror)
            centre, near, far = float_projection(cell, vertex, mirror)
            assert p.is_center == centre
            assert float(p.near_angle.r) * math.pi == pytest.approx(near, abs=1e-9)
            assert float(p.far_angle.r) * math.pi == pytest.approx(far, abs=1e-9)
            assert (p.is_center, p.near_angle.r, p.far_angle.r) == closed_form_projection(q, p.k)
            assert cell.boundary_distance(vertex, p.near) == 1


def test_projection_golden_values():
    p = project_vertex_to_mirror(develop_cell(12, 6), 0, (2, 8))  # k = 2
    assert p.k == 2 and not p.is_center
    assert p.angles == (Angle(1, 3), Angle(1, 2))
    p = project_vertex_to_mirror(develop_cell(16, 6), 0, (1, 9))  # k = 1
    assert p.angles[0] == Angle(1, 6)
    # centre threshold: k >= (q - 1) / 2
    for q in QS:
        cell = develop_cell(28, q)
        for k in range(7):
            p = project_vertex_to_mirror(cell, 0, (k, k + 14))
            assert p.k == k and p.is_center == (2 * k >= q - 1)
    centre = project_vertex_to_mirror(develop_cell(14, 6), 0, (3, 10))
    assert centre.is_center and centre.angles == (Angle(5, 12), Angle(5, 12))
    assert develop_cell(14, 6).center_angle == Angle(1, 12)


def test_projection_errors():
    cell = develop_cell(8, 3)
    with pytest.raises(MirrorNotInCell):
        project_vertex_to_mirror(cell, 0, (0, 3))
    with pytest.raises(MirrorNotInCell):
        project_vertex_to_mirror(cell, 9, (0, 4))


# angle algebra ------------------------------------------------------------
fractions = st.fractions(min_value=0, max_value=2, max_denominator=24)


@given(fractions, fractions, fractions)
def test_oplus_algebra(a, b, c):
    A, B, C = Angle(a), Angle(b), Angle(c)
    assert A + ZERO == A and A + PI == PI
    assert (A + B) + C == A + (B + C) == oplus(A, B, C)
    assert A + B == B + A
    assert Angle(a + b) == A + B


def test_snap_rejects_off_grid():
    assert snap(math.pi / 3, 6) == Fraction(1, 3)
    with pytest.raises(SnapError):
        snap(1.0, 12)


# composite_angle ---------------------------------------------------------
def _hexagon_and_square():
    # v = 0; hexagon corner between edges to 1 and 5; square corner between 1 and 7
    return build_complex([[0, 1, 2, 3, 4, 5], [0, 7, 6, 1]])


def test_composite_angle_example():
    X = _hexagon_and_square()
    L = link(X, 0, T)
    c = L.corner_arc(0)
    y = LinkPoint.on_arc(c, L.arcs[c].weight / 2)
    x = LinkPoint.at_node(X.edge_between(0, 7))
    assert composite_angle(X, 0, 0, y, x) == Angle(5, 6)
    # y along an edge reduces to the plain link distance
    y1 = LinkPoint.at_node(X.edge_between(0, 1))
    assert composite_angle(X, 0, 0, y1, x) == Angle(1, 2)


def test_composite_angle_rejects_inside_direction():
    X = _hexagon_and_square()
    L = link(X, 0, T)
    c = L.corner_arc(0)
    with pytest.raises(DirectionInsideCell):
        composite_angle(X, 0, 0, LinkPoint.at_node(X.edge_between(0, 1)), LinkPoint.on_arc(c, Fraction(1, 5)))


@pytest.mark.parametrize("name, X", SMALL[:4] + [("hex_sq", _hexagon_and_square())], ids=lambda s: s if isinstance(s, str) else "")
def test_composite_angle_matches_split_link(name, X):
    for v in range(X.n_vertices):
        L = link(X, v, T)
        points = [LinkPoint.at_node(u) for u in L.nodes]
        points += [LinkPoint.on_arc(i, a.weight * Fraction(1, 3)) for i, a in enumerate(L.arcs)]
        for face, _ in X.vertex_corners[v]:
            c = L.corner_arc(face)
            w = L.arcs[c].weight
            for y in (LinkPoint.on_arc(c, w / 2), LinkPoint.on_arc(c, w / 4), LinkPoint.at_node(L.arcs[c].a)):
                for x in points:
                    if x.arc == c:
                        continue
                    want = split_link_distance(L, y, x)
                    got = composite_angle(X, v, face, y, x)
                    assert got == (PI if want >= 1 else Angle(want))


# bounding cells and disjointness -----------------------------------------
def _grid_setup():
    X = square_grid(4, 4)
    walls = build_walls(X)
    by_edge = {e: W for W in walls for e in W.dual_edges}
    return X, by_edge


def test_bounding_cell_grid_example():
    X, by_edge = _grid_setup()
    v, right, up, down, left = 12, 13, 7, 17, 11  # row 2, column 2 of a 5x5 vertex grid
    W = by_edge[X.edge_between(v, right)]  # vertical wall just right of v
    P = next(f for f in W.carrier_faces if {v, right, up} <= set(X.faces[f]))
    # projection runs along [v, right]; the square on {right, v, down} bounds
    got = bounding_cell_criterion(X, v, down, W, P)
    assert [(c.u, c.p) for c in got] == [(right, 2)]
    assert got[0].angle == ZERO
    # the parallel wall dual to [v, left] is certified disjoint
    assert bounding_cell_criterion(X, v, left, W, P) == []


def test_bounding_cell_preconditions():
    X, by_edge = _grid_setup()
    W = by_edge[X.edge_between(12, 13)]
    P = next(f for f in W.carrier_faces if 12 in X.faces[f])
    with pytest.raises(PreconditionViolated):
        bounding_cell_criterion(X, 12, 0, W, P)
    with pytest.raises(PreconditionViolated):
        bounding_cell_criterion(X, 12, 13, W, P)
    far = next(f for f in range(X.n_faces) if f not in W.carrier_faces)
    with pytest.raises(PreconditionViolated):
        bounding_cell_criterion(X, 12, 11, W, far)


@pytest.mark.parametrize("name", ["hex", "oct3"])
def test_bounding_cell_large_type_sound(name):
    X = ball(name, 3)
    S = system(X)
    empties = 0
    for W in S.walls:
        for v in W.carrier_vertices:
            for P in W.carrier_faces:
                if v not in X.faces[P]:
                    continue
                for x in X.neighbors(v):
                    if X.edge_between(v, x) in X.face_edges[P]:
                        continue
                    if not bounding_cell_criterion(X, v, x, W, P, WeightScheme.LARGE_TYPE):
                        empties += 1
                        assert not walls_intersect(X, S.wall_of_edge(X.edge_between(v, x)), W)
    assert empties > 0


def test_disjointness_grid_examples():
    X, by_edge = _grid_setup()
    v = 12
    left, right = by_edge[X.edge_between(v, 11)], by_edge[X.edge_between(v, 13)]
    assert disjointness_predicts(X, v, left, right) is Prediction.DISJOINT
    up = by_edge[X.edge_between(v, 7)]
    assert disjointness_predicts(X, v, left, up) is Prediction.UNKNOWN
    with pytest.raises(DirectionsNotComputable):
        disjointness_predicts(X, v, left, left)
    with pytest.raises(DirectionsNotComputable):
        disjointness_predicts(X, 0, left, right)


def test_disjointness_large_type_example():
    X = ball("oct3", 3)
    S = system(X)
    hits = 0
    for v in range(X.n_vertices):
        ws = [W for W in S.walls if v in W.carrier_vertices]
        for W in ws:
            for Wp in ws:
                if W.id < Wp.id and disjointness_predicts(X, v, W, Wp) is Prediction.DISJOINT:
                    hits += 1
    assert hits > 0


def test_projection_direction_in_square_runs_along_dual_edge():
    X, by_edge = _grid_setup()
    W = by_edge[X.edge_between(12, 13)]
    d = projection_direction(X, 12, W)
    assert d.node == X.edge_between(12, 13)
