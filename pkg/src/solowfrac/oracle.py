"""Independent numerical references for the series solutions.

* ``solve_classical``: fixed-step classical Runge-Kutta (order 4), alpha = 1.
* ``solve_caputo``: fractional Adams-Bashforth-Moulton predictor-corrector
  with product-trapezoidal weights and full history.
* ``taylor_coefficients``: exact derivatives k^(n)(0) by repeated
  differentiation of the vector field (Lie derivatives).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .solver import SolowParams
from .special import DomainError, gamma

TAYLOR_MAX_ORDER = 12


class NegativeStateError(ArithmeticError):
    """The integrator produced k < 0, where k**mu is undefined."""


@dataclass(frozen=True)
class Trajectory:
    t: np.ndarray
    k: np.ndarray
    method: str
    h: float

    @property
    def samples(self):
        return list(zip(self.t.tolist(), self.k.tolist()))

    def at(self, t_query):
        """Linear interpolation onto ``t_query``."""
        return np.interp(t_query, self.t, self.k)


def _grid(t_end, h):
    if not (t_end > 0 and math.isfinite(t_end)):
        raise DomainError(f"t_end must be a finite number > 0, got {t_end!r}")
    if not (h > 0 and h <= t_end):
        raise DomainError(f"step h must satisfy 0 < h <= t_end, got {h!r}")
    n = max(1, math.ceil(t_end / h - 1e-9))
    return n, t_end / n


def _check(k, bad, method):
    if bad >= 0:
        raise NegativeStateError(f"{method}: state went negative at step {bad}")
    return k


def solve_classical(params: SolowParams, t_end: float, h: float = 1e-3) -> Trajectory:
    if params.alpha != 1.0:
        raise DomainError("solve_classical requires alpha = 1")
    n, h_eff = _grid(t_end, h)
    k, bad = _kernels.rk4(params.p, params.q, params.mu, params.k0, h_eff, n)
    k = _check(k, bad, "rk4")
    return Trajectory(np.linspace(0.0, t_end, n + 1), k, "rk4", h_eff)


def solve_caputo(params: SolowParams, t_end: float, h: float = 5e-4) -> Trajectory:
    alpha = params.alpha
    n, h_eff = _grid(t_end, h)
    b, a = _kernels.abm_weights(alpha, n)
    c_pred = h_eff ** alpha / gamma(alpha + 1.0)
    c_corr = h_eff ** alpha / gamma(alpha + 2.0)
    k, bad = _kernels.abm(params.p, params.q, params.mu, alpha, params.k0,
                          c_pred, c_corr, b, a, n)
    k = _check(k, bad, "abm")
    return Trajectory(np.linspace(0.0, t_end, n + 1), k, "fractional-abm", h_eff)


def solve_oracle(params: SolowParams, t_end: float, h: float | None = None) -> Trajectory:
    """Classical integrator for alpha = 1, predictor-corrector otherwise."""
    if params.alpha == 1.0:
        return solve_classical(params, t_end, 1e-3 if h is None else h)
    return solve_caputo(params, t_end, 5e-4 if h is None else h)


def taylor_coefficients(params: SolowParams, order: int) -> list[float]:
    """[k(0), k'(0), ..., k^(order)(0)] for k' = p k**mu - q k.

    Each derivative is a state function  sum_a c_a k**(1 + a (mu - 1)),
    stored as {a: c_a}; the next one is its k-derivative times the vector
    field (chain rule).
    """
    if params.alpha != 1.0:
        raise DomainError("taylor_coefficients requires alpha = 1")
    if int(order) != order or not 1 <= order <= TAYLOR_MAX_ORDER:
        raise DomainError(f"order must be an integer in [1, {TAYLOR_MAX_ORDER}], got {order!r}")
    p, q, mu, k0 = params.p, params.q, params.mu, params.k0
    field = {1: p, 0: -q}  # p k**mu - q k
    expr = dict(field)
    out = [k0]
    for n in range(1, int(order) + 1):
        out.append(sum(c * k0 ** (1.0 + a * (mu - 1.0)) for a, c in expr.items()))
        if n == order:
            break
        nxt = {}
        for a, c in expr.items():
            dc = c * (1.0 + a * (mu - 1.0))  # d/dk of k**(1 + a(mu-1)) lowers the power by 1
            if dc == 0.0:
                continue
            for b_, cf in field.items():
                nxt[a + b_] = nxt.get(a + b_, 0.0) + dc * cf
        expr = nxt
    return out
