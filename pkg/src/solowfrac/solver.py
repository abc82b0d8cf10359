"""Sumudu / variational-iteration series solution of the Solow-Swan equation.

Classical model:   k'(t)        = p k**mu - q k,  k(0) = k0
Caputo model:      D^alpha k(t) = p k**mu - q k,  k(0) = k0,  0 < alpha <= 1

With multiplier -u**s (s = 1 classical, s = alpha Caputo) the correction
functional collapses to the recursion

    w_0     = k0
    w_{n+1} = S^-1[ u**s * (p S[A_n] - q S[w_n]) ]

and each pass contributes exactly one monomial c_n t**(n s).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .adomian import AdomianTable, PowerNonlinearity
from .series import FracPowerSeries, add, evaluate, scale
from .special import DomainError
from .sumudu import inverse_st, multiply_by_u, st

DEFAULT_ORDER = 10
MAX_ORDER = 50


@dataclass(frozen=True)
class SolowParams:
    p: float = 1.0
    q: float = 1.0
    mu: float = 0.5
    alpha: float = 1.0
    k0: float = 0.5

    def __post_init__(self):
        for name in ("p", "q", "mu", "k0"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and value > 0 and math.isfinite(value)):
                raise DomainError(f"{name} must be a finite number > 0, got {value!r}")
        if not 0.0 < self.alpha <= 1.0:
            raise DomainError(f"alpha must lie in (0, 1], got {self.alpha!r}")

    @property
    def steady_state(self) -> float | None:
        """Non-trivial equilibrium (p/q)**(1/(1-mu)); None when mu == 1."""
        if self.mu == 1.0:
            return None
        return (self.p / self.q) ** (1.0 / (1.0 - self.mu))

    def replace(self, **changes) -> "SolowParams":
        values = {k: getattr(self, k) for k in ("p", "q", "mu", "alpha", "k0")}
        values.update(changes)
        return SolowParams(**values)


@dataclass(frozen=True)
class SeriesSolution:
    params: SolowParams
    order: int
    components: tuple
    combined: FracPowerSeries
    multiplier_exponent: float

    def coefficients(self) -> np.ndarray:
        """Coefficient of each single-monomial component w_0 ... w_N."""
        return np.array([w.terms[0][0] if w.terms else 0.0 for w in self.components])

    def __call__(self, t):
        return evaluate_solution(self, t)


@dataclass(frozen=True)
class ValidityWindow:
    t_max: float
    criterion: str
    tol: float = field(default=float("nan"))


def _svim(params: SolowParams, N: int, s: float) -> SeriesSolution:
    if int(N) != N or not 1 <= N <= MAX_ORDER:
        raise DomainError(f"order must be an integer in [1, {MAX_ORDER}], got {N!r}")
    N = int(N)
    p, q = params.p, params.q
    table = AdomianTable(PowerNonlinearity(params.mu, params.k0))
    w = [FracPowerSeries.constant(params.k0)]
    a_n = table.polys[0]
    for n in range(N):
        image = add(scale(st(a_n), p), scale(st(w[n]), -q))
        w_next = inverse_st(multiply_by_u(image, s))
        w.append(w_next)
        if n + 1 < N:
            a_n = table.push(w_next)
    combined = FracPowerSeries()
    for comp in w:
        combined = add(combined, comp)
    return SeriesSolution(params, N, tuple(w), combined, float(s))


def svim_integer(params: SolowParams, N: int = DEFAULT_ORDER) -> SeriesSolution:
    """Series solution of the classical (first-order) equation; ``params.alpha`` is ignored."""
    return _svim(params, N, 1.0)


def svim_caputo(params: SolowParams, N: int = DEFAULT_ORDER) -> SeriesSolution:
    """Series solution of the Caputo equation of order ``params.alpha``."""
    return _svim(params, N, params.alpha)


def solve_series(params: SolowParams, N: int = DEFAULT_ORDER) -> SeriesSolution:
    if params.alpha == 1.0:
        return svim_integer(params, N)
    return svim_caputo(params, N)


def evaluate_solution(sol: SeriesSolution, t):
    return evaluate(sol.combined, t)


# Components smaller than this fraction of k0 count as vanished.
_VANISH_REL = 1e-14


def validity_window(sol: SeriesSolution, tol: float = 1e-6, t_lo: float = 1e-6,
                    t_hi: float = 1e6, points: int = 481) -> ValidityWindow:
    """Heuristic range where the truncated series can be trusted.

    Walks a geometric grid upward from ``t_lo`` and stops at the first point
    where either the last retained term exceeds ``tol`` times the partial sum
    or the last three nonzero terms stop decreasing in magnitude. The
    returned ``t_max`` is the last grid point that passed.
    """
    if not tol > 0:
        raise DomainError(f"tol must be > 0, got {tol!r}")
    k0 = sol.params.k0
    coeffs = sol.coefficients()
    nonzero = [n for n, c in enumerate(coeffs) if abs(c) > _VANISH_REL * abs(k0)]
    if nonzero == [0]:
        return ValidityWindow(math.inf, "degenerate-constant", tol)
    if len(nonzero) < 3:
        raise DomainError(
            f"validity window needs at least 3 nonzero components, got {len(nonzero)}"
        )
    s = sol.multiplier_exponent
    tail = nonzero[-3:]
    grid = np.geomspace(t_lo, t_hi, points)
    mags = np.abs(coeffs[tail])[:, None] * grid[None, :] ** (np.array(tail, dtype=float)[:, None] * s)
    values = np.abs(evaluate_solution(sol, grid))
    ok = (mags[-1] < tol * values) & (mags[2] < mags[1]) & (mags[1] < mags[0])
    if not ok[0]:
        return ValidityWindow(0.0, "degenerate", tol)
    first_bad = np.argmin(ok) if not ok.all() else points
    return ValidityWindow(float(grid[first_bad - 1]), "term-ratio", tol)
