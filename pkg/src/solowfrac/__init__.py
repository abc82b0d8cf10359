"""Series and numerical solutions of the classical and Caputo-fractional Solow-Swan equation."""

from .adomian import AdomianSequence, PowerNonlinearity, adomian_polynomials, derivative_at
from .model import (
    CapitalLabourPath,
    Equilibrium,
    EquilibriumReport,
    LabourParams,
    equilibria,
    reconstruct_capital,
    rhs,
)
from .oracle import Trajectory, solve_caputo, solve_classical, solve_oracle, taylor_coefficients
from .series import ExponentTolerance, FracPowerSeries, add, evaluate, multiply, scale, truncate
from .solver import (
    SeriesSolution,
    SolowParams,
    ValidityWindow,
    evaluate_solution,
    solve_series,
    svim_caputo,
    svim_integer,
    validity_window,
)
from .special import DomainError, EvalPolicy, NonConvergenceError, gamma, mittag_leffler
from .sumudu import (
    SumuduImage,
    convolve,
    inverse_st,
    st,
    st_caputo_residual,
    st_first_derivative_residual,
)

__version__ = "0.1.0"
