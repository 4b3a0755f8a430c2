"""Small hand-built complexes used as test fixtures and CLI examples."""

from __future__ import annotations

from ..core import EvenComplex, build_complex


def annulus(n_squares: int = 8) -> EvenComplex:
    """A ring of squares; its radial edges form one wall whose graph is a cycle."""
    inner = list(range(n_squares))
    outer = [n_squares + i for i in range(n_squares)]
    faces = [
        [inner[i], inner[(i + 1) % n_squares], outer[(i + 1) % n_squares], outer[i]]
        for i in range(n_squares)
    ]
    return build_complex(faces, name=f"annulus_{n_squares}")


def three_squares() -> EvenComplex:
    """Three squares around vertex 0: the link there is a cycle of length 3 pi / 2."""
    return build_complex([[0, 1, 2, 3], [0, 3, 4, 5], [0, 5, 6, 1]], name="three_squares")


def double_gluing() -> EvenComplex:
    """Two squares sharing two consecutive edges at vertex 1.

    Vertex 1 gets two corners between the same pair of edges, so its link
    has parallel arcs.
    """
    return build_complex([[0, 1, 2, 3], [0, 1, 2, 4]], name="double_gluing")


def hexagon() -> EvenComplex:
    return build_complex([list(range(6))], name="hexagon")


def octagon_chain() -> EvenComplex:
    """Two octagons and a 12-gon strung along one wall, plus a filler octagon.

    The wall crosses the octagon ``[0..7]`` from edge ``{0, 1}`` to edge
    ``{4, 5}``, continues into the 12-gon across ``{0, 1}`` and into a second
    octagon across ``{4, 5}``.  The filler octagon closes off vertex 0, whose
    link becomes a cycle of length 7 pi / 3.
    """
    faces = [
        [0, 1, 2, 3, 4, 5, 6, 7],
        [1, 0, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17],
        [5, 4, 18, 19, 20, 21, 22, 23],
        [0, 7, 24, 25, 26, 27, 28, 8],
    ]
    return build_complex(faces, name="octagon_chain")


FIXTURES = {
    "annulus": annulus,
    "three_squares": three_squares,
    "double_gluing": double_gluing,
    "hexagon": hexagon,
    "octagon_chain": octagon_chain,
}
