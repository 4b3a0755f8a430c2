import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evenwalls.angles import PI, ZERO, Angle
from evenwalls.core import build_complex
from evenwalls.generators import fixtures as fx
from evenwalls.generators import square_grid
from evenwalls.links import (
    LinkPoint,
    SchemeViolation,
    WeightScheme,
    check_link_condition,
    girth,
    is_simplicial,
    link,
    link_distance,
    path_length,
)

from conftest import SMALL, ball

O, T, LT = WeightScheme.ORIGINAL, WeightScheme.TRUNCATED, WeightScheme.LARGE_TYPE


def interior_vertex(X):
    return next(v for v in range(X.n_vertices) if girth(link(X, v)) != math.inf)


def test_grid_interior_link_is_square_cycle():
    X = square_grid(2, 2)
    L = link(X, 4, O)
    assert len(L.nodes) == 4 and len(L.arcs) == 4
    assert {a.weight for a in L.arcs} == {Fraction(1, 2)}
    assert girth(L) == 2


def test_hex_interior_link_is_triangle():
    X = ball("hex", 2)
    L = link(X, 0, O)
    assert len(L.arcs) == 3 and {a.weight for a in L.arcs} == {Fraction(2, 3)}
    assert girth(L) == 2


def test_lone_octagon_truncated_corner():
    X = build_complex([list(range(8))])
    L = link(X, 0, T)
    assert [a.weight for a in L.arcs] == [Fraction(3, 4)]
    assert girth(L) == math.inf


def test_largetype_rejects_squares():
    with pytest.raises(SchemeViolation):
        link(square_grid(1, 1), 0, LT)


def test_simpliciality():
    assert is_simplicial(link(square_grid(2, 2), 4))
    assert not is_simplicial(link(fx.double_gluing(), 1))
    assert is_simplicial(link(fx.hexagon(), 0))


def test_girth_examples():
    assert girth(link(ball("oct3", 2), 0, O)) == Fraction(9, 4)
    assert girth(link(ball("sq5", 2), 0, O)) == Fraction(5, 2)
    assert girth(link(fx.three_squares(), 0, O)) == Fraction(3, 2)


def test_link_condition_verdicts():
    assert check_link_condition(ball("hex", 3)).ok
    assert check_link_condition(ball("sq5", 3)).ok
    rep = check_link_condition(fx.three_squares())
    assert not rep.ok and [r.vertex for r in rep.failures] == [0]
    assert rep.failures[0].girth == Fraction(3, 2)


def test_link_distance_examples():
    X = square_grid(2, 2)
    L = link(X, 4, O)
    up, down = X.edge_between(4, 1), X.edge_between(4, 7)
    left = X.edge_between(4, 3)
    a = LinkPoint.at_node(up)
    assert link_distance(L, a, a) == ZERO
    assert link_distance(L, a, LinkPoint.at_node(left)) == Angle(1, 2)
    assert link_distance(L, a, LinkPoint.at_node(down)) == PI


def _cycles(L):
    """All embedded cycles of a link as lists of arc indices (brute force)."""
    found = set()
    for i, arc in enumerate(L.arcs):
        if arc.a == arc.b:
            found.add((i,))

    def extend(start, node, used_nodes, used_arcs):
        for j, arc in enumerate(L.arcs):
            if j in used_arcs or arc.a == arc.b or node not in (arc.a, arc.b):
                continue
            other = arc.b if arc.a == node else arc.a
            if other == start and len(used_arcs) >= 1:
                found.add(tuple(sorted(used_arcs + [j])))
            elif other not in used_nodes:
                extend(start, other, used_nodes | {other}, used_arcs + [j])

    for s in L.nodes:
        extend(s, s, {s}, [])
    return found


def _brute_girth(L):
    cycles = _cycles(L)
    return min((sum(L.arcs[i].weight for i in c) for c in cycles), default=math.inf)


@pytest.mark.parametrize("name, X", SMALL, ids=[n for n, _ in SMALL])
def test_girth_matches_cycle_enumeration(name, X):
    for v in range(X.n_vertices):
        for scheme in (O, T):
            L = link(X, v, scheme)
            if len(L.nodes) <= 12:
                assert girth(L) == _brute_girth(L)


def test_girth_enumeration_on_non_simplicial_links():
    for X in (fx.double_gluing(), fx.three_squares()):
        for v in range(X.n_vertices):
            L = link(X, v)
            assert girth(L) == _brute_girth(L)


@given(st.integers(2, 100))
def test_truncated_weights_in_range(n):
    w = T.corner_weight(2 * n)
    assert Fraction(1, 4) <= w <= Fraction(5, 6)
    assert w <= O.corner_weight(2 * n)


@pytest.mark.parametrize("name, X", SMALL, ids=[n for n, _ in SMALL])
def test_original_pass_implies_truncated_pass(name, X):
    assert check_link_condition(X, O).links_ok
    assert check_link_condition(X, T).links_ok


def _points(L):
    pts = [LinkPoint.at_node(u) for u in L.nodes]
    for i, arc in enumerate(L.arcs):
        pts += [LinkPoint.on_arc(i, arc.weight / 3), LinkPoint.on_arc(i, arc.weight / 2)]
    return pts


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_link_distance_is_a_metric(data):
    X = ball("mixed_46", 2)
    v = data.draw(st.integers(0, X.n_vertices - 1))
    L = link(X, v, T)
    pts = _points(L)
    a, b, c = (data.draw(st.sampled_from(pts)) for _ in range(3))
    ab, bc, ac = path_length(L, a, b), path_length(L, b, c), path_length(L, a, c)
    assert ab == path_length(L, b, a)
    assert path_length(L, a, a) == 0
    if max(ab, bc, ac) < 1:
        assert ac <= ab + bc
    assert link_distance(L, a, b) == Angle(min(ab, 1))
