import math

import numpy as np
import pytest

from solowfrac.adomian import (
    AdomianTable,
    PowerNonlinearity,
    adomian_polynomials,
    derivative_at,
)
from solowfrac.series import FracPowerSeries as S, evaluate
from solowfrac.special import DomainError

rng = np.random.default_rng(20240611)


@pytest.mark.parametrize("mu, k0, i, expected", [(2, 3, 0, 9.0), (2, 3, 1, 6.0), (0.5, 1, 2, -0.25)])
def test_derivative_at(mu, k0, i, expected):
    assert derivative_at(PowerNonlinearity(mu, k0), i) == pytest.approx(expected, rel=1e-15)


def test_derivative_at_vanishes_past_integer_power():
    f = PowerNonlinearity(2, 3)
    assert derivative_at(f, 3) == 0.0


def test_a0_is_k0_to_the_mu():
    f = PowerNonlinearity(1.7, 2.3)
    w = [S.constant(2.3), S([(1, 1)])]
    assert adomian_polynomials(f, w, 1)[0] == S.constant(2.3 ** 1.7)


def test_power_two_examples():
    f = PowerNonlinearity(2, 3)
    w = [S.constant(3), S([(1, 1)]), S()]
    A = adomian_polynomials(f, w, 2)
    assert A[1] == S([(6, 1)])
    assert A[2] == S([(1, 2)])


def test_rejects_nonconstant_w0():
    f = PowerNonlinearity(2, 1)
    with pytest.raises(DomainError):
        adomian_polynomials(f, [S([(1, 0), (1, 1)]), S()], 1)
    with pytest.raises(DomainError):
        adomian_polynomials(f, [S.constant(2.0), S()], 1)
    with pytest.raises(DomainError):
        adomian_polynomials(f, [S.constant(1.0)], 1)


@pytest.mark.parametrize("bad", [dict(mu=0, k0=1), dict(mu=1, k0=0), dict(mu=1, k0=-2)])
def test_power_nonlinearity_invariants(bad):
    with pytest.raises(DomainError):
        PowerNonlinearity(**bad)


def _scalar_table(mu, ks):
    f = PowerNonlinearity(mu, ks[0])
    A = adomian_polynomials(f, [S.constant(k) if k else S() for k in ks], 3)
    return [a.coeff_at(0.0) for a in A]


def test_general_table_and_power_specialisation():
    for _ in range(200):
        mu = rng.uniform(0.01, 3)
        k0 = rng.uniform(0.1, 5)
        k1, k2, k3 = rng.uniform(-2, 2, 3)
        A = _scalar_table(mu, [k0, k1, k2, k3])
        d = [derivative_at(PowerNonlinearity(mu, k0), i) for i in range(4)]
        general = [
            d[0],
            k1 * d[1],
            k2 * d[1] + k1 ** 2 / 2 * d[2],
            k3 * d[1] + k1 * k2 * d[2] + k1 ** 3 / 6 * d[3],
        ]
        power = [
            k0 ** mu,
            mu * k1 * k0 ** (mu - 1),
            mu * k2 * k0 ** (mu - 1) + mu * (mu - 1) * k1 ** 2 / 2 * k0 ** (mu - 2),
        ]
        for got, ref in zip(A, general):
            assert got == pytest.approx(ref, rel=1e-12, abs=1e-12 * max(map(abs, general)))
        for got, ref in zip(A, power):
            assert got == pytest.approx(ref, rel=1e-12, abs=1e-12 * max(map(abs, power)))


def test_dependency_structure():
    f = PowerNonlinearity(0.6, 1.4)
    w = [S.constant(1.4)] + [S([(rng.uniform(-1, 1), 0.5 * n)]) for n in range(1, 6)]
    base = adomian_polynomials(f, w, 5)
    for n in range(5):
        perturbed = list(w)
        perturbed[n + 1] = S([(7.0, 0.5 * (n + 1))])
        again = adomian_polynomials(f, perturbed, 5)
        assert again[: n + 1] == base[: n + 1]
        assert again[n + 1] != base[n + 1]


def _miller_power(a, mu, N):
    # coefficients of (sum a_n x^n)^mu via J.C.P. Miller's recurrence
    b = [a[0] ** mu]
    for n in range(1, N + 1):
        b.append(sum((mu * k - n + k) * a[k] * b[n - k] for k in range(1, n + 1)) / (n * a[0]))
    return b


@pytest.mark.parametrize("alpha", [0.25, 0.5, 1.0])
def test_matches_miller_recurrence(alpha):
    for _ in range(20):
        mu = rng.uniform(0.1, 3)
        k0 = rng.uniform(0.2, 4)
        c = [k0] + list(rng.uniform(-1, 1, 8))
        w = [S.constant(k0)] + [S([(c[n], n * alpha)]) for n in range(1, 9)]
        A = adomian_polynomials(PowerNonlinearity(mu, k0), w, 8)
        ref = _miller_power(c, mu, 8)
        for n in range(9):
            got = A[n].coeff_at(n * alpha)
            assert len(A[n]) <= 1
            assert got == pytest.approx(ref[n], rel=1e-10, abs=1e-13 * abs(ref[0]))


def test_incremental_table_matches_batch():
    f = PowerNonlinearity(1.3, 0.8)
    w = [S.constant(0.8)] + [S([(0.1 * n, 0.7 * n)]) for n in range(1, 7)]
    table = AdomianTable(f)
    for n in range(1, 7):
        table.push(w[n])
    assert tuple(table.polys) == tuple(adomian_polynomials(f, w, 6))


@pytest.mark.parametrize("N", [1, 2, 3])
def test_resummation_error_order(N):
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 50
    local = np.random.default_rng(N)
    mu = float(local.uniform(0.2, 2.5))
    # k0 = 1 makes A_0 exact, so the comparison is not swamped by its rounding
    c = [1.0] + list(local.uniform(-0.8, 0.8, N))
    w = [S.constant(1.0)] + [S([(c[n], n)]) for n in range(1, N + 1)]
    A = adomian_polynomials(PowerNonlinearity(mu, 1.0), w, N)
    ts = [1e-2, 1e-3, 1e-4]
    errs = []
    for t in ts:
        approx = mpmath.fsum(mpmath.mpf(cf) * mpmath.mpf(t) ** mpmath.mpf(b)
                             for a in A for cf, b in a.terms)
        exact = mpmath.fsum(mpmath.mpf(c[n]) * mpmath.mpf(t) ** n for n in range(N + 1)) ** mpmath.mpf(mu)
        errs.append(float(abs(approx - exact)))
    slope = np.polyfit(np.log(ts), np.log(errs), 1)[0]
    assert slope >= N + 0.8, (errs, slope)
