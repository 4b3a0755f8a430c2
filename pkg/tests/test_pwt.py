import numpy as np
import pytest

from evenwalls.core import ShapeSet, shapes
from evenwalls.generators import fixtures as fx
from evenwalls.generators import square_grid
from evenwalls.pwt import (
    NotVerifiedComplex,
    exhaustive_separating_wall,
    find_separating_wall,
    scan_all,
    separation_radius,
    theoretical_bound,
    verify_pwt,
)
from evenwalls.pwt import _geodesic
from evenwalls.walls import HalfDist, WallSystem, build_walls, d1_vertex_wall

from conftest import SMALL, ball, system


def test_theoretical_bound_examples():
    assert theoretical_bound(ShapeSet(frozenset({4, 6}))) == HalfDist(11)
    assert theoretical_bound(ShapeSet(frozenset({6})), large_type=True) == HalfDist(4)
    assert theoretical_bound(ShapeSet(frozenset({20}))) == HalfDist(11)
    assert theoretical_bound(ShapeSet(frozenset({24}))) == HalfDist(13)
    with pytest.raises(ValueError):
        theoretical_bound(ShapeSet(frozenset({4})), large_type=True)


def test_radius_grid_interior_wall():
    X = square_grid(6, 6)
    S = WallSystem(X)
    interior = [W for W in S.walls if 0 not in W.endpoints and 6 not in W.endpoints]
    for W in interior:
        assert separation_radius(X, W, S)[0] == HalfDist(1)


def test_radius_single_hexagon():
    X = fx.hexagon()
    S = WallSystem(X)
    for W in S.walls:
        r, witness = separation_radius(X, W, S)
        assert str(r) == "1+1/2" and d1_vertex_wall(X, witness, W) == r


def test_radius_hex_ball_within_large_type_bound():
    X = ball("hex", 4)
    S = system(X)
    assert max(separation_radius(X, W, S)[0] for W in S.walls) <= HalfDist(3)


def test_verify_pwt_examples():
    rep = verify_pwt(ball("hex", 4), large_type=True)
    assert rep.ok and rep.max_radius <= HalfDist(3) and rep.K == HalfDist(4)
    rep = verify_pwt(ball("sq5", 4))
    assert rep.ok and rep.K == HalfDist(11)
    d = rep.as_dict()
    assert d["verdict"] == "pass" and d["violations"] == [] and len(d["walls"]) == len(build_walls(ball("sq5", 4)))


def test_verify_pwt_rejects_unverified():
    with pytest.raises(NotVerifiedComplex) as info:
        verify_pwt(fx.annulus(8))
    assert info.value.cause == "WallNotEmbedded"
    with pytest.raises(NotVerifiedComplex) as info:
        verify_pwt(fx.three_squares())
    assert info.value.cause == "LinkConditionFailed"
    with pytest.raises(NotVerifiedComplex):
        verify_pwt(square_grid(2, 2), large_type=True)


def test_parallel_report_identical():
    X = ball("mixed_46", 3)
    a = verify_pwt(X, workers=1).as_dict()
    b = verify_pwt(X, workers=4).as_dict()
    assert a == b


def test_find_grid_parallel_lines():
    X = square_grid(5, 5)
    S = WallSystem(X)
    W = next(W for W in S.walls if set(W.endpoints) == set(range(12)))  # wall between rows 0 and 1
    v = 3 * 6 + 2  # row 3
    Wp = find_separating_wall(X, v, W, S)
    assert Wp is not None
    rows = {min(X.edges[e]) // 6 for e in Wp.dual_edges}
    assert rows in ({1}, {2})


@pytest.mark.parametrize("name, X", SMALL, ids=[n for n, _ in SMALL])
def test_find_agrees_with_exhaustive(name, X):
    S = system(X)
    table = scan_all(X, S)
    for W in S.walls:
        for v in range(X.n_vertices):
            found = find_separating_wall(X, v, W, S)
            ex = exhaustive_separating_wall(X, v, W, S)
            assert (found is None) == (ex is None) == (table[W.id, v] < 0)
            if ex is not None:
                assert table[W.id, v] == ex.id


@pytest.mark.parametrize("name, X", SMALL, ids=[n for n, _ in SMALL])
def test_separating_wall_separates_from_every_endpoint(name, X):
    S = system(X)
    for W in S.walls:
        for v in range(X.n_vertices):
            Wp = find_separating_wall(X, v, W, S)
            if Wp is None:
                continue
            for u in W.endpoints:
                assert Wp.id in S.separating(v, u)


@pytest.mark.parametrize("name, X", SMALL, ids=[n for n, _ in SMALL])
def test_radius_below_bound(name, X):
    S = system(X)
    K = theoretical_bound(shapes(X))
    for W in S.walls:
        assert separation_radius(X, W, S)[0] < K


def _square_or_hexagon_scan(X, S):
    """Count premises of the square/hexagon dichotomy and return any offending face sizes."""
    fired, bad = 0, []
    faces_by_triple = {}
    for f, cyc in enumerate(X.faces):
        m = len(cyc)
        for i in range(m):
            faces_by_triple.setdefault((cyc[i - 1], cyc[i], cyc[(i + 1) % m]), []).append(f)
    uns_table = scan_all(X, S) < 0
    for W in S.walls:
        inside = set(W.carrier_vertices)
        for v in np.flatnonzero(uns_table[W.id]):
            v = int(v)
            if v in inside:
                continue
            path = _geodesic(X, v, int(S.nearest_endpoint[W.id, v]))
            on = [i for i, u in enumerate(path) if u in inside]
            if len(on) != 2 or on[0] < 1:
                continue
            i = on[0]
            triple = (path[i - 1], path[i], path[i + 1])
            for f in faces_by_triple.get(triple, []) + faces_by_triple.get(triple[::-1], []):
                fired += 1
                if len(X.faces[f]) not in (4, 6):
                    bad.append((W.id, v, f, len(X.faces[f])))
    return fired, bad


@pytest.mark.parametrize("name, X", SMALL, ids=[n for n, _ in SMALL])
def test_square_or_hexagon_dichotomy(name, X):
    fired, bad = _square_or_hexagon_scan(X, system(X))
    assert bad == [], bad


def test_dichotomy_scan_is_exercised():
    assert sum(_square_or_hexagon_scan(X, system(X))[0] for _, X in SMALL) > 0
