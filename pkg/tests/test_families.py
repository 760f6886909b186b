from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mopsrel import (
    DomainError,
    JacobiParams,
    chebyshev_kind,
    jacobi_norm_ratio,
    jacobi_recurrence,
    moments_from_recurrence,
    mops_from_recurrence,
)
from oracles import apply_raw, op_via_determinants, path_moments

params_st = st.fractions(min_value=Fraction(-3, 4), max_value=3, max_denominator=4)


def test_parameter_domain():
    with pytest.raises(DomainError):
        JacobiParams(-1, 0)
    with pytest.raises(DomainError):
        JacobiParams(0, "-3/2")


def test_removable_singularities_are_covered():
    # alpha + beta = 0 hits the generic beta_0 formula's zero denominator
    rec = jacobi_recurrence(JacobiParams("1/2", "-1/2"), 4)
    assert rec.beta[0] == Fraction(-1, 2)
    assert rec.gamma[0] == Fraction(1, 4)
    # alpha + beta = -1 hits the generic gamma_1 formula
    rec = jacobi_recurrence(JacobiParams("-1/2", "-1/2"), 4)
    assert rec.gamma[0] == Fraction(1, 2)
    assert all(g == Fraction(1, 4) for g in rec.gamma[1:])


@pytest.mark.parametrize(
    "kind,beta0", [(2, Fraction(0)), (3, Fraction(1, 2)), (4, Fraction(-1, 2))]
)
def test_chebyshev_kinds(kind, beta0):
    rec = chebyshev_kind(kind, 8)
    assert rec.beta[0] == beta0
    assert all(b == 0 for b in rec.beta[1:])
    assert all(g == Fraction(1, 4) for g in rec.gamma)
    with pytest.raises(DomainError):
        chebyshev_kind(1, 4)


@settings(max_examples=20, deadline=None)
@given(params_st, params_st)
def test_symmetric_case_has_zero_beta(a, _b):
    rec = jacobi_recurrence(JacobiParams(a, a), 6)
    assert all(b == 0 for b in rec.beta)


@pytest.mark.parametrize(
    "a,b", [("1/2", "1/2"), ("-1/2", "1/2"), ("0", "0"), ("1", "2"), ("-3/4", "1/3")]
)
def test_recurrence_against_determinant_oracle(a, b):
    """The closed-form recurrence coefficients must agree with polynomials
    recovered from brute-force moments alone."""
    rec = jacobi_recurrence(JacobiParams(a, b), 5)
    brute = path_moments(list(rec.beta) + [Fraction(0)] * 8, rec.gamma, 7)
    p = mops_from_recurrence(rec, 4)
    for k in range(4):
        assert p[k] == op_via_determinants(brute, k)
    # and the squared norms match the gamma products
    acc = Fraction(1)
    for n in range(1, 4):
        acc *= rec.gamma[n - 1]
        assert apply_raw(brute, p[n] * p[n]) == acc


def test_norm_ratio_exact_and_float_check():
    for a, b in [("1/2", "1/2"), ("1/2", "-1/2"), ("0", "0"), ("1", "2")]:
        params = JacobiParams(a, b)
        for n in range(1, 7):
            value = jacobi_norm_ratio(params, n, float_check=True)
            rec = jacobi_recurrence(params, n + 1)
            acc = Fraction(1)
            for k in range(1, n + 1):
                acc *= rec.gamma[k - 1]
            assert value == acc


def test_moments_mu1():
    for a, b in [("1/2", "1/2"), ("-1/2", "1/2"), ("2", "1/3")]:
        rec = jacobi_recurrence(JacobiParams(a, b), 4)
        mom = moments_from_recurrence(rec, 5)
        assert mom.moments[0] == 1
        assert mom.moments[1] == rec.beta[0]
