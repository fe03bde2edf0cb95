import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from isop.lattice import edge_boundary, induced_edge_count
from isop.polygon import (
    PreconditionError,
    TwelveGonParams,
    angle_condition_holds,
    boundary_stats,
    closure_residuals,
    corner_vertices,
    direct_boundary,
    hull,
    is_hull,
    params_from_hull,
    sample_params,
    separating_line_exists,
    side_index,
    solve_t4_t5,
    support,
    twelvegon_points,
    vertex_count,
)
from isop.trilattice import TRI_SPEC, DomainError

HEXAGON = frozenset([(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (-1, 1), (1, -1)])


def closing_params(max_side=7, min_side=0):
    """Realizable parameters drawn by solving the closure equations for t4, t5."""
    return st.integers(0, 2**32).map(
        lambda seed: sample_params(random.Random(seed), max_side, min_side)
    )


def pick_count(params: TwelveGonParams) -> int:
    """Lattice points of the corner polygon from its area and boundary (Pick)."""
    corners = corner_vertices(params)[:-1]
    twice_area = sum(
        p[0] * q[1] - q[0] * p[1] for p, q in zip(corners, corners[1:] + corners[:1])
    )
    boundary_points = params.b
    return Fraction(twice_area, 2) + Fraction(boundary_points, 2) + 1


def test_regular_55():
    p = TwelveGonParams.regular(2, 1)
    H = twelvegon_points(p)
    assert len(H) == 55 == vertex_count(p)
    assert params_from_hull(H) == p
    assert direct_boundary(p) == boundary_stats(p).boundary == 144
    assert induced_edge_count(H.points, TRI_SPEC) == 258


def test_hexagon_params():
    p = params_from_hull(HEXAGON)
    assert p == TwelveGonParams((1,) * 6, (0,) * 6)
    assert boundary_stats(p).boundary == 48 == edge_boundary(HEXAGON, TRI_SPEC)


def test_side_labels():
    assert side_index("u1") == 0 and side_index("t1") == 1 and side_index("t6") == 11
    p = TwelveGonParams(tuple(range(6)), tuple(range(10, 16)))
    assert p.side("u3") == 2 and p.side("t4") == 13


def test_open_walk_rejected():
    with pytest.raises(DomainError):
        twelvegon_points(TwelveGonParams((1, 0, 0, 0, 0, 0), (0,) * 6))


def test_not_a_hull():
    with pytest.raises(DomainError):
        params_from_hull({(0, 0), (2, 0)})


def test_boundary_precondition():
    p = TwelveGonParams((1, 0, 0, 1, 0, 0), (0,) * 6)
    assert closure_residuals(p) == (0, 0)
    assert not angle_condition_holds(p)
    with pytest.raises(PreconditionError):
        boundary_stats(p)


@given(closing_params())
def test_vertex_count_matches_enumeration(p):
    assert vertex_count(p) == len(twelvegon_points(p))


@given(closing_params())
def test_vertex_count_matches_pick(p):
    assert vertex_count(p) == pick_count(p)


@given(closing_params(min_side=0))
def test_round_trip_shape(p):
    # With zero-length sides several tuples can describe one shape; the shape must survive.
    H = twelvegon_points(p)
    q = params_from_hull(H)
    assert vertex_count(q) == len(H)
    assert len(twelvegon_points(q)) == len(H)


@given(closing_params(min_side=1))
def test_round_trip_nondegenerate(p):
    assert params_from_hull(twelvegon_points(p)) == p


@given(closing_params(min_side=1))
def test_boundary_formula(p):
    assert boundary_stats(p).boundary == direct_boundary(p)


@given(st.frozensets(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=1, max_size=15))
def test_hull_idempotent(S):
    H = hull(S)
    assert S <= H.points
    assert hull(H.points).points == H.points
    assert is_hull(H.points)
    assert support(H.points) == support(S)


def test_separating_line_examples():
    assert separating_line_exists({(0, 0), (3, 0)})
    assert not separating_line_exists(HEXAGON)


def dense_subset(seed: int) -> frozenset:
    rng = random.Random(seed)
    H = twelvegon_points(sample_params(rng, max_side=3, min_side=0))
    return frozenset(p for p in H.points if rng.random() < 0.75) or H.points


@settings(max_examples=300)
@given(st.integers(0, 2**32).map(dense_subset))
def test_hull_boundary_domination(S):
    from isop.lattice import is_connected

    assume(is_connected(S, TRI_SPEC) and not separating_line_exists(S))
    assert edge_boundary(hull(S).points, TRI_SPEC) <= edge_boundary(S, TRI_SPEC)


@pytest.mark.parametrize("k", range(1, 11))
def test_extremal_family_count(k):
    assert vertex_count(TwelveGonParams.regular(k, k - 1)) == 24 * k * k - 24 * k + 7


def test_boundary_k3():
    p = TwelveGonParams.regular(3, 2)
    assert boundary_stats(p).boundary == 240 == direct_boundary(p)


def test_degenerate_shapes():
    assert len(twelvegon_points(TwelveGonParams((0,) * 6, (0,) * 6))) == 1
    assert params_from_hull({(4, 4)}) == TwelveGonParams((0,) * 6, (0,) * 6)
    assert hull({(0, 0), (1, 0)}).points == {(0, 0), (1, 0)}


def test_second_reference_move_closes():
    k = 5
    p = TwelveGonParams((k, k, k - 1, k - 1, k - 1, k - 1), (k - 3,) + (k - 2,) * 5)
    assert closure_residuals(p) == (0, 0)


@given(closing_params(min_side=1), st.tuples(st.integers(-9, 9), st.integers(-9, 9)))
def test_anchor_translates(p, anchor):
    H = twelvegon_points(p, anchor)
    assert params_from_hull(H) == p
    assert corner_vertices(p, anchor)[0] == anchor
    assert anchor in H.points


def test_sampler():
    rng = random.Random(1)
    for _ in range(50):
        p = sample_params(rng)
        assert closure_residuals(p) == (0, 0)
