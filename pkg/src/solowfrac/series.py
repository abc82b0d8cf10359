"""Finite generalized power series  sum_i c_i * t**b_i  with real exponents b_i >= 0.

Series are immutable. Terms are kept as an exponent-sorted tuple of
``(coeff, exponent)`` pairs; exponents closer than the merge tolerance are
coalesced and negligible coefficients dropped on construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .special import DomainError

# Coefficients below this magnitude are treated as zero.
COEFF_FLOOR = 1e-300


@dataclass(frozen=True)
class ExponentTolerance:
    eps: float = 1e-12

    def __post_init__(self):
        if not 0.0 < self.eps <= 1e-6:
            raise ValueError(f"exponent tolerance must lie in (0, 1e-6], got {self.eps!r}")


DEFAULT_EXPONENT_TOL = ExponentTolerance()


class DomainMismatchError(TypeError):
    """Raised when a t-domain series is combined with a u-domain image."""


def _normalize(terms, eps):
    items = sorted(((float(c), float(b)) for c, b in terms), key=lambda cb: cb[1])
    merged = []
    for c, b in items:
        if b < 0.0:
            if b < -eps:
                raise DomainError(f"negative exponent {b!r} not supported")
            b = 0.0
        if merged and b - merged[-1][1] <= eps:
            merged[-1][0] += c
        else:
            merged.append([c, b])
    return tuple((c, b) for c, b in merged if abs(c) >= COEFF_FLOOR)


class _Series:
    variable = "x"
    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[float, float]] = (),
                 tol: ExponentTolerance = DEFAULT_EXPONENT_TOL):
        object.__setattr__(self, "terms", _normalize(terms, tol.eps))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def constant(cls, c):
        return cls([(c, 0.0)])

    @classmethod
    def monomial(cls, c, exponent):
        return cls([(c, exponent)])

    @classmethod
    def _raw(cls, terms):
        # Caller guarantees terms are already normalized.
        obj = cls.__new__(cls)
        object.__setattr__(obj, "terms", tuple(terms))
        return obj

    @property
    def coeffs(self) -> np.ndarray:
        return np.array([c for c, _ in self.terms], dtype=float)

    @property
    def exponents(self) -> np.ndarray:
        return np.array([b for _, b in self.terms], dtype=float)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(b == 0.0 for _, b in self.terms)

    def coeff_at(self, exponent, eps=DEFAULT_EXPONENT_TOL.eps) -> float:
        for c, b in self.terms:
            if abs(b - exponent) <= eps:
                return c
        return 0.0

    def max_exponent(self) -> float:
        return self.terms[-1][1] if self.terms else 0.0

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, self.terms))

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(other, -1.0))

    def __neg__(self):
        return scale(self, -1.0)

    def __mul__(self, other):
        if isinstance(other, _Series):
            return multiply(self, other)
        return scale(self, other)

    def __rmul__(self, other):
        return scale(self, other)

    def render(self) -> str:
        return render(self)

    def __repr__(self):
        return f"{type(self).__name__}({render(self)})"


class FracPowerSeries(_Series):
    """A series in the time variable ``t``."""

    variable = "t"
    __slots__ = ()


def _check_same_domain(a, b):
    if type(a) is not type(b):
        raise DomainMismatchError(
            f"cannot combine {type(a).__name__} with {type(b).__name__}"
        )


def add(a, b, tol: ExponentTolerance = DEFAULT_EXPONENT_TOL):
    _check_same_domain(a, b)
    return type(a)(a.terms + b.terms, tol)


def scale(a, c: float):
    c = float(c)
    if c == 0.0:
        return type(a)()
    return type(a)((ci * c, b) for ci, b in a.terms)


def multiply(a, b, tol: ExponentTolerance = DEFAULT_EXPONENT_TOL):
    """Cauchy product over exponent sums."""
    _check_same_domain(a, b)
    return type(a)(((ca * cb, ba + bb) for ca, ba in a.terms for cb, bb in b.terms), tol)


def shift(a, s: float):
    """Multiply by ``x**s`` (``s`` may be negative as long as no exponent goes below zero)."""
    return type(a)((c, b + s) for c, b in a.terms)


def truncate(a, max_exponent: float):
    if max_exponent < 0:
        raise DomainError(f"max_exponent must be >= 0, got {max_exponent!r}")
    return type(a)._raw(cb for cb in a.terms if cb[1] <= max_exponent)


def evaluate(a, t):
    """Sum of ``c * t**b``; accepts a scalar or an array of non-negative points.

    ``0**0`` is taken as 1, so ``evaluate(a, 0)`` is the constant coefficient.
    """
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < 0) or np.any(np.isnan(t_arr)):
        raise DomainError("series evaluation requires t >= 0")
    if not a.terms:
        out = np.zeros_like(t_arr)
    else:
        c = a.coeffs
        b = a.exponents
        # numpy defines 0.0**0.0 == 1.0
        out = np.sum(c[:, None] * np.power(t_arr.reshape(1, -1), b[:, None]), axis=0)
        out = out.reshape(t_arr.shape)
    if out.ndim == 0:
        return float(out)
    return out


def render(a) -> str:
    """Text form ``c0 + c1*t^b1 + ...`` with 17 significant digits."""
    if not a.terms:
        return "0"
    var = a.variable
    parts = []
    for c, b in a.terms:
        cs = f"{c:.17g}"
        if b == 0.0:
            parts.append(cs)
        else:
            parts.append(f"{cs}*{var}^{b:.17g}")
    return " + ".join(parts).replace("+ -", "- ")
