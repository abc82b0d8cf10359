"""Gamma and one-parameter Mittag-Leffler evaluation."""

from __future__ import annotations

import math
from dataclasses import dataclass


class DomainError(ValueError):
    """Argument outside the supported domain."""


class NonConvergenceError(ArithmeticError):
    """A series did not reach its tolerance within the allowed number of terms."""


# Direct Taylor summation loses all accuracy through cancellation beyond this.
ML_MAX_ABS_Z = 30.0


@dataclass(frozen=True)
class EvalPolicy:
    tol: float = 1e-12
    max_terms: int = 200

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError(f"tol must be > 0, got {self.tol!r}")
        if int(self.max_terms) != self.max_terms or self.max_terms < 1:
            raise DomainError(f"max_terms must be a positive integer, got {self.max_terms!r}")


DEFAULT_POLICY = EvalPolicy()


def gamma(x: float) -> float:
    """Gamma function for real ``x > 0``.

    Raises ``DomainError`` for ``x <= 0`` and ``OverflowError`` once the
    result exceeds the double range (``x`` above roughly 171.6).
    """
    x = float(x)
    if not x > 0:
        raise DomainError(f"gamma requires x > 0, got {x!r}")
    try:
        return math.gamma(x)
    except OverflowError:
        raise OverflowError(f"gamma({x!r}) overflows double precision") from None


def mittag_leffler(alpha: float, z: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """E_alpha(z) = sum z**n / Gamma(alpha*n + 1) by direct summation.

    Summation stops once the next term is below ``policy.tol`` times the
    running sum. Only ``|z| <= 30`` is accepted; the terms are formed through
    ``lgamma`` so large orders do not overflow.
    """
    alpha = float(alpha)
    z = float(z)
    if not 0.0 < alpha <= 2.0:
        raise DomainError(f"alpha must lie in (0, 2], got {alpha!r}")
    if not abs(z) <= ML_MAX_ABS_Z:
        raise DomainError(f"|z| must not exceed {ML_MAX_ABS_Z}, got {z!r}")
    if z == 0.0:
        return 1.0

    log_abs_z = math.log(abs(z))
    negative = z < 0.0
    terms = [1.0]
    total = 1.0
    for n in range(1, policy.max_terms + 1):
        term = math.exp(n * log_abs_z - math.lgamma(alpha * n + 1.0))
        if negative and n % 2:
            term = -term
        terms.append(term)
        total += term
        nxt = math.exp((n + 1) * log_abs_z - math.lgamma(alpha * (n + 1) + 1.0))
        if nxt < policy.tol * abs(total):
            return math.fsum(terms)
    raise NonConvergenceError(
        f"E_{alpha}({z}) did not converge within {policy.max_terms} terms"
    )
