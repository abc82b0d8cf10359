"""Term-wise Sumudu transform on generalized power series.

The transform S[k](u) = int_0^inf k(t u) exp(-t) dt sends the monomial
``t**b`` to ``Gamma(b + 1) * u**b``, so both directions act coefficient by
coefficient and are exact up to rounding of the Gamma factors.
"""

from __future__ import annotations

import math

from .series import DEFAULT_EXPONENT_TOL, FracPowerSeries, _Series, shift
from .special import DomainError, gamma


class SumuduImage(_Series):
    """A series in the transform variable ``u``."""

    variable = "u"
    __slots__ = ()


def _require(obj, cls):
    if type(obj) is not cls:
        raise TypeError(f"expected {cls.__name__}, got {type(obj).__name__}")


def st(f: FracPowerSeries) -> SumuduImage:
    _require(f, FracPowerSeries)
    return SumuduImage((c * gamma(b + 1.0), b) for c, b in f.terms)


def inverse_st(F: SumuduImage) -> FracPowerSeries:
    _require(F, SumuduImage)
    return FracPowerSeries((c / gamma(b + 1.0), b) for c, b in F.terms)


def multiply_by_u(F: SumuduImage, power: float) -> SumuduImage:
    """F(u) * u**power, for power >= 0."""
    _require(F, SumuduImage)
    if power < 0:
        raise DomainError("use a residual operator to divide by powers of u")
    return shift(F, power)


def _residual(K, k0, order, eps=DEFAULT_EXPONENT_TOL.eps):
    _require(K, SumuduImage)
    reduced = K - SumuduImage.constant(k0)
    for c, b in reduced.terms:
        if b < order - eps:
            raise DomainError(
                f"residual would carry u^{b - order:.17g}: term {c!r}*u^{b!r} "
                f"is below order {order!r}"
            )
    return SumuduImage((c, max(b - order, 0.0)) for c, b in reduced.terms)


def st_first_derivative_residual(K: SumuduImage, k0: float) -> SumuduImage:
    """(K(u) - k0) / u, the transform of k'(t) given K = S[k] and k(0) = k0."""
    return _residual(K, k0, 1.0)


def st_caputo_residual(K: SumuduImage, k0: float, alpha: float) -> SumuduImage:
    """u**(-alpha) * (K(u) - k0), the transform of the Caputo derivative of order alpha."""
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha!r}")
    return _residual(K, k0, float(alpha))


def _convolution_weight(a, b):
    # Beta-function weight B(a+1, b+1) of  int_0^t (t-x)^a x^b dx = B * t^(a+b+1)
    if a + b + 2.0 < 170.0:
        return gamma(a + 1.0) * gamma(b + 1.0) / gamma(a + b + 2.0)
    return math.exp(math.lgamma(a + 1.0) + math.lgamma(b + 1.0) - math.lgamma(a + b + 2.0))


def convolve(f: FracPowerSeries, g: FracPowerSeries) -> FracPowerSeries:
    """(f * g)(t) = int_0^t f(t - x) g(x) dx, extended bilinearly over terms."""
    _require(f, FracPowerSeries)
    _require(g, FracPowerSeries)
    return FracPowerSeries(
        (ca * cb * _convolution_weight(a, b), a + b + 1.0)
        for ca, a in f.terms
        for cb, b in g.terms
    )


def mittag_leffler_series(alpha: float, a: float, n_terms: int) -> FracPowerSeries:
    """First ``n_terms`` terms of E_alpha(a * t**alpha) as a t-series."""
    return FracPowerSeries(
        (a ** n / gamma(alpha * n + 1.0), alpha * n) for n in range(n_terms)
    )


def geometric_image(alpha: float, a: float, n_terms: int) -> SumuduImage:
    """First ``n_terms`` terms of 1 / (1 - a * u**alpha) expanded in u."""
    return SumuduImage((a ** n, alpha * n) for n in range(n_terms))
