"""Adomian polynomials for the power nonlinearity f(k) = k**mu.

A_n is the coefficient of x**n in

    sum_i f^(i)(k0) / i! * (w_1 x + w_2 x**2 + ...)**i,

obtained by formal composition with series-valued coefficients. The powers
of the inner polynomial are built one x-degree at a time, so A_n only ever
touches w_0 ... w_n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .series import FracPowerSeries, add, multiply, scale
from .special import DomainError


@dataclass(frozen=True)
class PowerNonlinearity:
    mu: float
    k0: float

    def __post_init__(self):
        if not self.mu > 0:
            raise DomainError(f"mu must be > 0, got {self.mu!r}")
        if not self.k0 > 0:
            raise DomainError(f"k0 must be > 0, got {self.k0!r}")

    def __call__(self, k):
        return k ** self.mu


def derivative_at(f: PowerNonlinearity, i: int) -> float:
    """i-th derivative of k**mu at k0: mu (mu-1) ... (mu-i+1) * k0**(mu-i)."""
    if i < 0:
        raise DomainError(f"derivative order must be >= 0, got {i!r}")
    falling = 1.0
    for j in range(i):
        falling *= f.mu - j
    return falling * f.k0 ** (f.mu - i)


class AdomianSequence(tuple):
    """Tuple of A_0 ... A_N."""

    @property
    def polys(self):
        return tuple(self)


class AdomianTable:
    """Incremental generator: feed w_1, w_2, ... and read A_1, A_2, ...

    ``powers[i][n]`` holds the x**n coefficient of (w_1 x + w_2 x**2 + ...)**i.
    """

    def __init__(self, f: PowerNonlinearity):
        self.f = f
        self.w = [FracPowerSeries.constant(f.k0)]
        self.powers = [[FracPowerSeries.constant(1.0)]]
        self.polys = [FracPowerSeries.constant(derivative_at(f, 0))]
        self._dcoef = [derivative_at(f, 0)]

    @property
    def order(self) -> int:
        return len(self.w) - 1

    def push(self, w_next: FracPowerSeries) -> FracPowerSeries:
        """Append w_{n} (n = current order + 1) and return A_n."""
        self.w.append(w_next)
        n = len(self.w) - 1
        self._dcoef.append(derivative_at(self.f, n) / math.factorial(n))
        zero = FracPowerSeries()
        self.powers[0].append(zero)
        self.powers.append([zero] * n)
        # x**n coefficient of P_i = sum_{j=1}^{n-i+1} w_j * P_{i-1}[n-j]
        for i in range(1, n + 1):
            acc = zero
            for j in range(1, n - i + 2):
                prev = self.powers[i - 1][n - j]
                if prev.terms and self.w[j].terms:
                    acc = add(acc, multiply(self.w[j], prev))
            self.powers[i].append(acc)
        a_n = zero
        for i in range(1, n + 1):
            if self.powers[i][n].terms:
                a_n = add(a_n, scale(self.powers[i][n], self._dcoef[i]))
        self.polys.append(a_n)
        return a_n


def adomian_polynomials(f: PowerNonlinearity, w: Sequence[FracPowerSeries], N: int) -> AdomianSequence:
    """A_0 ... A_N for components ``w`` (``w[0]`` must be the constant k0)."""
    if N < 0:
        raise DomainError(f"N must be >= 0, got {N!r}")
    if len(w) < N + 1:
        raise DomainError(f"need at least {N + 1} components, got {len(w)}")
    w0 = w[0]
    if not w0.is_constant():
        raise DomainError("w[0] must be a constant series")
    if not math.isclose(w0.coeff_at(0.0), f.k0, rel_tol=1e-14):
        raise DomainError(f"w[0] = {w0.coeff_at(0.0)!r} does not match k0 = {f.k0!r}")
    table = AdomianTable(f)
    for n in range(1, N + 1):
        table.push(w[n])
    return AdomianSequence(table.polys)
