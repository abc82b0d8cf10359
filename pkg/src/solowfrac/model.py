"""Right-hand side, equilibria and aggregate-capital reconstruction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .solver import SeriesSolution, SolowParams, evaluate_solution
from .special import DomainError

STABLE = "stable"
UNSTABLE = "unstable"
INFLEXION = "inflexion-marker"
UNDEFINED = "undefined"


def rhs(params: SolowParams, k):
    """p k**mu - q k for k >= 0 (scalar or array)."""
    k_arr = np.asarray(k, dtype=float)
    if np.any(k_arr < 0) or np.any(np.isnan(k_arr)):
        raise DomainError("rhs requires k >= 0")
    out = params.p * k_arr ** params.mu - params.q * k_arr
    if out.ndim == 0:
        return float(out)
    return out


def rhs_slope(params: SolowParams, k: float) -> float:
    """d(rhs)/dk = p mu k**(mu-1) - q, for k > 0."""
    return params.p * params.mu * k ** (params.mu - 1.0) - params.q


@dataclass(frozen=True)
class Equilibrium:
    k_star: float | None
    classification: str


@dataclass(frozen=True)
class EquilibriumReport:
    points: tuple
    inflexion_marker: float | None = None

    def as_records(self):
        return [{"k_star": pt.k_star, "classification": pt.classification} for pt in self.points]


def _classify_origin(params):
    # Sign of rhs just above 0. The k**mu term dominates for mu < 1 and the
    # linear term for mu > 1.
    if params.mu < 1.0:
        return UNSTABLE
    if params.mu > 1.0:
        return STABLE
    diff = params.p - params.q
    if diff > 0:
        return UNSTABLE
    if diff < 0:
        return STABLE
    return UNDEFINED


def equilibria(params: SolowParams) -> EquilibriumReport:
    origin = Equilibrium(0.0, _classify_origin(params))
    k_star = params.steady_state
    if k_star is None:
        return EquilibriumReport((origin, Equilibrium(None, UNDEFINED)))
    slope = rhs_slope(params, k_star)
    if slope < 0:
        cls = STABLE
    elif slope > 0:
        cls = UNSTABLE
    else:
        cls = UNDEFINED
    return EquilibriumReport((origin, Equilibrium(k_star, cls)), inflexion_marker=k_star)


@dataclass(frozen=True)
class LabourParams:
    L0: float = 1.0
    psi: float = 0.0

    def __post_init__(self):
        if not self.L0 > 0:
            raise DomainError(f"L0 must be > 0, got {self.L0!r}")

    def __call__(self, t):
        return self.L0 * np.exp(self.psi * np.asarray(t, dtype=float))


@dataclass(frozen=True)
class CapitalLabourPath:
    t: np.ndarray
    k: np.ndarray
    L: np.ndarray
    K: np.ndarray

    @property
    def samples(self):
        return list(zip(self.t.tolist(), self.k.tolist(), self.L.tolist(), self.K.tolist()))


def reconstruct_capital(sol: SeriesSolution, labour: LabourParams,
                        grid: Sequence[float]) -> CapitalLabourPath:
    """Aggregate capital K(t) = k(t) L(t) with L(t) = L0 exp(psi t)."""
    t = np.asarray(grid, dtype=float)
    if t.ndim != 1:
        raise DomainError("grid must be one-dimensional")
    if np.any(t < 0):
        raise DomainError("grid points must be >= 0")
    if np.any(np.diff(t) < 0):
        raise DomainError("grid must be sorted ascending")
    k = np.asarray(evaluate_solution(sol, t), dtype=float)
    L = labour(t)
    return CapitalLabourPath(t, k, L, k * L)
