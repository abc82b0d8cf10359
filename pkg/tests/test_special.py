import math

import numpy as np
import pytest

from solowfrac.special import (
    DomainError,
    EvalPolicy,
    NonConvergenceError,
    gamma,
    mittag_leffler,
)


@pytest.mark.parametrize("x, expected", [(1.0, 1.0), (5.0, 24.0), (0.5, math.sqrt(math.pi))])
def test_gamma_examples(x, expected):
    assert gamma(x) == pytest.approx(expected, rel=1e-13)


def test_gamma_recurrence_on_dense_grid():
    for x in np.linspace(0.1, 20.0, 2001):
        assert gamma(x + 1) == pytest.approx(x * gamma(x), rel=1e-12)


def test_gamma_against_mpmath():
    mpmath = pytest.importorskip("mpmath")
    for x in [1e-3, 0.37, 2.5, 17.25, 99.9, 170.0]:
        ref = float(mpmath.gamma(mpmath.mpf(x)))
        assert gamma(x) == pytest.approx(ref, rel=1e-13)


@pytest.mark.parametrize("x", [0.0, -1.0, -0.5])
def test_gamma_rejects_nonpositive(x):
    with pytest.raises(DomainError):
        gamma(x)


def test_gamma_overflow():
    with pytest.raises(OverflowError):
        gamma(200.0)


def test_ml_at_zero_is_exactly_one():
    assert mittag_leffler(0.7, 0.0) == 1.0


def test_ml_alpha_one_is_exp():
    assert mittag_leffler(1.0, 1.0) == pytest.approx(math.e, rel=1e-12)
    for t in np.linspace(0.0, 3.0, 31):
        assert mittag_leffler(1.0, t) == pytest.approx(math.exp(t), rel=1e-10)


def test_ml_half_matches_erfc_identity():
    # E_{1/2}(z) = exp(z^2) erfc(-z)
    for z in [-1.0, -2.5, -0.3, 0.4, 1.7]:
        ref = math.exp(z * z) * math.erfc(-z)
        assert mittag_leffler(0.5, z) == pytest.approx(ref, rel=1e-10)
    assert mittag_leffler(0.5, -1.0) == pytest.approx(0.4275836, abs=5e-8)


def test_ml_alpha_two_is_cosh():
    for z in [-4.0, -1.0, 0.5, 2.0]:
        ref = math.cosh(math.sqrt(z)) if z >= 0 else math.cos(math.sqrt(-z))
        assert mittag_leffler(2.0, z) == pytest.approx(ref, rel=1e-10, abs=1e-13)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.9])
def test_ml_non_increasing_on_negative_axis(alpha):
    zs = np.linspace(0.0, -2.0, 201)
    values = np.array([mittag_leffler(alpha, z) for z in zs])
    assert np.all(np.diff(values) <= 1e-14)


@pytest.mark.parametrize("alpha", [0.5, 0.9, 1.0])
@pytest.mark.parametrize("z", [-0.25, -0.6, -1.0])
def test_ml_alternating_partial_sum_bound(alpha, z):
    exact = mittag_leffler(alpha, z, EvalPolicy(tol=1e-16))
    terms = [z ** n / math.gamma(alpha * n + 1) for n in range(60)]
    mags = np.abs(terms)
    for n in range(1, 30):
        if not np.all(np.diff(mags[n:]) <= 0):
            continue
        partial = math.fsum(terms[:n])
        assert abs(partial - exact) <= mags[n] * (1 + 1e-9) + 2e-15


@pytest.mark.parametrize("alpha", [0.0, -0.1, 2.5])
def test_ml_rejects_bad_alpha(alpha):
    with pytest.raises(DomainError):
        mittag_leffler(alpha, 0.5)


def test_ml_guards_large_arguments():
    with pytest.raises(DomainError):
        mittag_leffler(0.5, -31.0)


def test_ml_non_convergence():
    with pytest.raises(NonConvergenceError):
        mittag_leffler(1.0, 20.0, EvalPolicy(tol=1e-12, max_terms=5))


@pytest.mark.parametrize("kwargs", [dict(tol=0.0), dict(max_terms=0), dict(tol=-1.0)])
def test_eval_policy_invariants(kwargs):
    with pytest.raises(DomainError):
        EvalPolicy(**kwargs)
