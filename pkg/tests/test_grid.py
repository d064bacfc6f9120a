"""Lattice model: points, directions, implicit adjacency, basic queries."""

from __future__ import annotations

import itertools
import random

import pytest

from supergrid import (
    Direction,
    VertexNotInGraph,
    adjacent,
    from_points,
    induced_neighborhood,
    neighbors,
)

from conftest import P, block, oracle_adjacent, pts


def test_point_ordering_is_y_then_x():
    assert P(5, 0) < P(0, 1)
    assert P(0, 1) < P(1, 1)
    assert sorted([P(1, 1), P(5, 0), P(0, 1)]) == [P(5, 0), P(0, 1), P(1, 1)]


def test_point_equality_is_coordinate_equality():
    assert P(2, 3) == P(2, 3)
    assert P(2, 3) != P(3, 2)
    assert len({P(1, 1), P(1, 1), P(2, 1)}) == 2


def test_direction_offsets_match_contract():
    expected = {
        "UL": (-1, -1), "U": (0, -1), "UR": (1, -1), "L": (-1, 0),
        "R": (1, 0), "DL": (-1, 1), "D": (0, 1), "DR": (1, 1),
    }
    assert {d.name: d.value for d in Direction} == expected
    assert [d.name for d in Direction] == ["UL", "U", "UR", "L", "R", "DL", "D", "DR"]


def test_direction_offsets_distinct_and_closed_under_negation():
    offsets = [d.value for d in Direction]
    assert len(set(offsets)) == 8
    for d in Direction:
        assert d.opposite().value == (-d.dx, -d.dy)
        assert d.opposite().opposite() is d


@pytest.mark.parametrize(
    "a,b,expected",
    [
        ((0, 0), (1, 1), True),
        ((0, 0), (2, 0), False),
        ((3, 3), (3, 3), False),
        ((0, 0), (1, 0), True),
        ((0, 0), (0, -1), True),
        ((-3, -3), (-2, -3), True),
        ((0, 0), (2, 1), False),
    ],
)
def test_adjacent_examples(a, b, expected):
    assert adjacent(P(*a), P(*b)) is expected


def test_adjacent_symmetry_over_coordinate_window():
    coords = range(-10, 11, 4)
    for ax, ay, bx, by in itertools.product(coords, repeat=4):
        a, b = P(ax, ay), P(bx, by)
        assert adjacent(a, b) == adjacent(b, a)
        assert adjacent(a, b) == oracle_adjacent(a, b)


def test_dihedral_symmetries_preserve_adjacency():
    symmetries = [
        lambda x, y: (x, y), lambda x, y: (-y, x), lambda x, y: (-x, -y),
        lambda x, y: (y, -x), lambda x, y: (-x, y), lambda x, y: (x, -y),
        lambda x, y: (y, x), lambda x, y: (-y, -x),
    ]
    rng = random.Random(7)
    for _ in range(200):
        a = P(rng.randint(-8, 8), rng.randint(-8, 8))
        b = P(rng.randint(-8, 8), rng.randint(-8, 8))
        for sym in symmetries:
            sa, sb = P(*sym(a.x, a.y)), P(*sym(b.x, b.y))
            assert adjacent(sa, sb) == adjacent(a, b)


def test_neighbors_on_2x2_block(block2):
    assert neighbors(block2, P(0, 0)) == pts((1, 0), (0, 1), (1, 1))


def test_neighbors_isolated_vertex():
    g = from_points([P(5, 7)])
    assert neighbors(g, P(5, 7)) == []


def test_neighbors_center_of_3x3_block(block3):
    nbrs = neighbors(block3, P(1, 1))
    assert len(nbrs) == 8
    assert set(nbrs) == set(block3.vertices) - {P(1, 1)}
    # Direction scan order UL, U, UR, L, R, DL, D, DR.
    assert nbrs == pts((0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2))


def test_neighbors_requires_membership(block2):
    with pytest.raises(VertexNotInGraph):
        neighbors(block2, P(9, 9))


def test_neighbors_agree_with_brute_force_filter():
    rng = random.Random(11)
    for _ in range(50):
        points = list({
            P(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(rng.randint(1, 18))
        })
        g = from_points(points)
        for v in points:
            assert neighbors(g, v) == sorted(
                (w for w in points if oracle_adjacent(v, w)),
                key=lambda w: [d.value for d in Direction].index((w.x - v.x, w.y - v.y)),
            )
            assert len(neighbors(g, v)) <= 8


def test_induced_neighborhood_on_2x2(block2):
    sub = induced_neighborhood(block2, P(0, 0))
    assert sub.vertices == frozenset(pts((1, 0), (0, 1), (1, 1)))


def test_induced_neighborhood_no_edges_kept_implicitly():
    g = from_points(pts((0, 0), (1, 0), (2, 0)))
    sub = induced_neighborhood(g, P(1, 0))
    assert sub.vertices == frozenset(pts((0, 0), (2, 0)))
    assert not adjacent(P(0, 0), P(2, 0))


def test_induced_neighborhood_isolated():
    g = from_points([P(5, 7)])
    assert len(induced_neighborhood(g, P(5, 7))) == 0


def test_from_points_deduplicates():
    g = from_points(pts((0, 0), (0, 0), (1, 0)))
    assert len(g) == 2


def test_from_points_empty():
    g = from_points([])
    assert len(g) == 0
    assert g.bounding_box() is None


def test_from_points_negative_coordinates():
    g = from_points(pts((-3, -3), (-2, -3)))
    assert len(g) == 2
    assert adjacent(*g.sorted_vertices())
    assert g.bounding_box() == (-3, -3, -2, -3)


def test_translation_preserves_adjacency_and_degree():
    g = block(3, 2)
    shifted = g.translate(17, -9)
    for v in g.sorted_vertices():
        w = P(v.x + 17, v.y - 9)
        assert g.degree(v) == shifted.degree(w)
        assert len(neighbors(g, v)) == g.degree(v)


def test_graph_equality_and_iteration_order():
    g = from_points(pts((1, 1), (0, 0), (1, 0)))
    assert g == from_points(pts((1, 0), (1, 1), (0, 0)))
    assert list(g) == pts((0, 0), (1, 0), (1, 1))
