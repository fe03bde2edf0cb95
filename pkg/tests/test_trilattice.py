import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from isop.lattice import neighbors
from isop.trilattice import (
    LONG_GENERATORS,
    SHORT_GENERATORS,
    TRI_SPEC,
    DomainError,
    ceil_sqrt,
    e_of_n,
    embed_to_plane,
    max_edges,
    small_n,
    special_k_of_n,
    special_n,
    squared_distance,
    table_rows,
)
from reference_data import SMALL_INCREMENT_SIZES, SPECIAL_SIZES, REFERENCE_ROWS


def test_table_rows_match_printed_values():
    assert table_rows(55) == list(REFERENCE_ROWS)


@pytest.mark.parametrize("n,e", [(7, 18), (55, 258), (151, 786), (56, 263), (3, 3)])
def test_e_values(n, e):
    assert e_of_n(n) == e


def test_e_domain():
    with pytest.raises(DomainError):
        e_of_n(2)
    assert (small_n(1), small_n(2)) == (0, 1)
    assert max_edges(2) == 1
    with pytest.raises(DomainError):
        small_n(3)


@pytest.mark.parametrize("k,n", list(enumerate(SPECIAL_SIZES, 1)))
def test_special_sizes(k, n):
    assert special_k_of_n(n) == k
    assert special_n(k) == n
    assert 6 * n - 6 == (12 * k - 6) ** 2
    assert (96 * n - 96) == (48 * k - 24) ** 2


@pytest.mark.parametrize("n", [1, 2, 6, 8, 56, 150, 152, 726])
def test_non_special(n):
    assert special_k_of_n(n) is None


def test_special_branch_beats_generic_formula():
    for n in SPECIAL_SIZES:
        generic = 6 * n - ceil_sqrt(96 * n - 63)
        assert e_of_n(n) == 6 * n - 4 * math.isqrt(6 * n - 6)
        assert e_of_n(n) >= generic


@given(st.integers(0, 10**30))
def test_ceil_sqrt(x):
    r = ceil_sqrt(x)
    assert r * r >= x and (r == 0 or (r - 1) ** 2 < x)


def test_ceil_sqrt_negative():
    with pytest.raises(DomainError):
        ceil_sqrt(-1)


def test_increment_laws():
    deltas = {n: e_of_n(n) - e_of_n(n - 1) for n in range(4, 10001)}
    assert all(deltas[n] in (5, 6) for n in range(56, 10001))
    small = sorted(n for n, d in deltas.items() if d < 5)
    assert tuple(small) == tuple(n for n in SMALL_INCREMENT_SIZES if n >= 4)


def test_twelve_regular():
    assert TRI_SPEC.degree == 12
    assert len(neighbors((3, -7), TRI_SPEC)) == 12


def test_embedding():
    assert embed_to_plane((1, 0)) == (Fraction(1), Fraction(0))
    assert embed_to_plane((0, 1)) == (Fraction(1, 2), Fraction(1, 2))
    assert squared_distance((0, 0), (1, 1)) == 3
    for u in SHORT_GENERATORS:
        assert squared_distance((0, 0), u) == 1
    for u in LONG_GENERATORS:
        assert squared_distance((0, 0), u) == 3
