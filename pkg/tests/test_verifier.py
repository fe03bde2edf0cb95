import itertools
import random
from decimal import Decimal, getcontext

import pytest
from hypothesis import given, settings, strategies as st

from isop.lattice import induced_edge_count
from isop.polygon import TwelveGonParams, angle_condition_holds, closure_residuals, twelvegon_points, vertex_count
from isop.trilattice import TRI_SPEC
from isop.verifier import (
    EdgeFormula,
    OffsetCase,
    Verdict,
    b_t_identity_holds,
    base_case_bounds,
    base_case_tuples,
    bounded_compositions,
    case_edge_formula,
    case_vertex_count,
    check_case,
    decide,
    derive_LQ,
    edge_identity_holds,
    enumerate_inductive_cases,
    offsets_edge_formula,
    sqrt_sum_le,
    verify_base_cases,
    verify_inductive_cases,
)

EXTREMAL = OffsetCase((0,) * 6, (2,) * 6)
ROW2 = OffsetCase((0, 0, 1, 1, 1, 1), (0, 1, 1, 1, 1, 1))


@pytest.fixture(scope="module")
def sample_cases():
    cases = list(itertools.islice(enumerate_inductive_cases(), 0, None, 997))
    return cases


def test_base_case_bounds():
    assert base_case_bounds(8) == (54, 7)
    assert base_case_bounds(20)[0] == 88


@pytest.mark.parametrize("n", [8, 9, 11])
def test_base_case_tuples_against_plain_enumeration(n):
    _, b_bound = base_case_bounds(n)
    expected = set()
    for v in bounded_compositions(12, b_bound - 1):
        p = TwelveGonParams.from_tuple(v)
        if closure_residuals(p) == (0, 0) and vertex_count(p) == n and angle_condition_holds(p):
            expected.add(v)
    assert {p.as_tuple() for p in base_case_tuples(n, b_bound)} == expected


def test_base_cases_pass():
    report = verify_base_cases(sizes=(8, 9, 11))
    assert report.passed
    assert all(e.tuples > 0 for e in report.entries)


def test_bounded_compositions_count():
    assert sum(1 for _ in bounded_compositions(3, 4)) == 35


def test_derive_LQ_examples():
    assert derive_LQ(EXTREMAL) == (-24, 7)
    assert derive_LQ(EXTREMAL, symbolic=True) == (-24, 7)
    for case, t_side in ((OffsetCase((0,) * 6, (1,) * 6), -2), (OffsetCase((0,) * 6, (0,) * 6), -3)):
        L, Q = derive_LQ(case)
        for k in range(4, 9):
            assert case_vertex_count(L, Q, k) == vertex_count(TwelveGonParams.regular(k, k + t_side))


def test_edge_formula_examples():
    assert case_edge_formula(EXTREMAL) == EdgeFormula(-96, 0)
    assert case_edge_formula(ROW2) == EdgeFormula(-47, 0)
    # Offsets of the fifth move-table row, radicand offset +16.
    assert offsets_edge_formula((1, -1, 0, -1, -1, -1), (-3, -2, -2, -2, -2, -2))[2] == EdgeFormula(16, 0)


def test_check_case_examples():
    assert check_case(EXTREMAL).verdict is Verdict.EXCEPTIONAL
    assert check_case(ROW2).verdict is Verdict.PASS


def test_decide_negative_control():
    L, Q = derive_LQ(ROW2)
    k = decide(EdgeFormula(-47, 1), L, Q)
    assert k is not None
    n = case_vertex_count(L, Q, k)
    assert n >= 31
    assert decide(EdgeFormula(-47, 0), L, Q) is None
    # a < -63 with c = 0 fails at the first admissible size.
    assert decide(EdgeFormula(-96, 0), L, Q) == 3


def _decimal_le(c, x, y):
    getcontext().prec = 80
    return Decimal(c) + Decimal(x).sqrt() - Decimal(y).sqrt()


@given(st.integers(-60, 60), st.integers(0, 10**6), st.integers(0, 10**6))
def test_sqrt_sum_le(c, x, y):
    d = _decimal_le(c, x, y)
    if abs(d) > Decimal(10) ** -30:
        assert sqrt_sum_le(c, x, y) == (d <= 0)


@given(st.integers(0, 300), st.integers(0, 300), st.integers(-40, 40))
def test_sqrt_sum_le_exact_squares(r, s, c):
    assert sqrt_sum_le(c, r * r, s * s) == (c + r <= s)


def test_symbolic_and_interpolated_agree(sample_cases):
    for case in sample_cases:
        assert derive_LQ(case) == derive_LQ(case, symbolic=True)
        assert edge_identity_holds(case)
        assert b_t_identity_holds(case)
        assert case.closure_residuals() == (0, 0)


def test_end_to_end_small_k(sample_cases):
    for case in sample_cases[::4]:
        L, Q = derive_LQ(case)
        f = case_edge_formula(case, (L, Q))
        for k in range(3, 8):
            p = case.params_at(k)
            if min(p.as_tuple()) < 0:
                continue
            assert case_vertex_count(L, Q, k) == vertex_count(p)
            if not angle_condition_holds(p):
                continue
            pts = twelvegon_points(p).points
            n = len(pts)
            e = induced_edge_count(pts, TRI_SPEC)
            # e = 6n - sqrt(96n + a) + c with the root equal to 48k + L.
            assert 96 * n + f.a == (48 * k + L) ** 2
            assert e == 6 * n - (48 * k + L) + f.c


def test_thread_independence(sample_cases):
    one = verify_inductive_cases(threads=1, chunk=7, cases=sample_cases)
    two = verify_inductive_cases(threads=2, chunk=7, cases=sample_cases)
    assert one.to_json() == two.to_json()
    assert not one.failures
