"""Time-stepping kernels for the oracle integrators.

Each kernel exists twice: a loop form compiled with numba, and a numpy form
that vectorises what it can. ``USE_NUMBA`` picks the default; both are
importable so they can be compared against each other.

Kernels return ``(k, bad)`` where ``bad`` is the index of the first step that
produced a negative state, or -1 when the run completed.
"""

import numpy as np

from ._accel import HAVE_NUMBA, njit

USE_NUMBA = HAVE_NUMBA


def _rk4_py(p, q, mu, k0, h, n):
    k = np.empty(n + 1)
    k[0] = k0
    for i in range(n):
        y = k[i]
        k1 = p * y ** mu - q * y
        y2 = y + 0.5 * h * k1
        if y2 < 0.0:
            return k, i + 1
        k2 = p * y2 ** mu - q * y2
        y3 = y + 0.5 * h * k2
        if y3 < 0.0:
            return k, i + 1
        k3 = p * y3 ** mu - q * y3
        y4 = y + h * k3
        if y4 < 0.0:
            return k, i + 1
        k4 = p * y4 ** mu - q * y4
        y_next = y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if y_next < 0.0:
            return k, i + 1
        k[i + 1] = y_next
    return k, -1


rk4_numba = njit(_rk4_py)


def rk4_numpy(p, q, mu, k0, h, n):
    # Scalar recurrence; plain Python floats beat 0-d numpy arrays here.
    return _rk4_py(float(p), float(q), float(mu), float(k0), float(h), int(n))


def abm_weights(alpha, n):
    """Predictor weights b[i] and corrector weights a[i] indexed by lag i = m - j."""
    i = np.arange(n + 2, dtype=float)
    b = (i[1:] ** alpha - i[:-1] ** alpha)[: n + 1]
    a1 = alpha + 1.0
    a = (i[:n + 1] + 2.0) ** a1 + i[:n + 1] ** a1 - 2.0 * (i[:n + 1] + 1.0) ** a1
    return b, a


def _abm_loop(p, q, mu, alpha, k0, c_pred, c_corr, b, a, n):
    k = np.empty(n + 1)
    f = np.empty(n + 1)
    k[0] = k0
    f[0] = p * k0 ** mu - q * k0
    a1 = alpha + 1.0
    for m in range(n):
        s = 0.0
        for j in range(m + 1):
            s += b[m - j] * f[j]
        kp = k0 + c_pred * s
        if kp < 0.0:
            return k, m + 1
        fp = p * kp ** mu - q * kp
        s = (m ** a1 - (m - alpha) * (m + 1.0) ** alpha) * f[0]
        for j in range(1, m + 1):
            s += a[m - j] * f[j]
        y = k0 + c_corr * (fp + s)
        if y < 0.0:
            return k, m + 1
        k[m + 1] = y
        f[m + 1] = p * y ** mu - q * y
    return k, -1


abm_numba = njit(_abm_loop)


def abm_numpy(p, q, mu, alpha, k0, c_pred, c_corr, b, a, n):
    k = np.empty(n + 1)
    f = np.empty(n + 1)
    k[0] = k0
    f[0] = p * k0 ** mu - q * k0
    a1 = alpha + 1.0
    for m in range(n):
        kp = k0 + c_pred * np.dot(b[m::-1], f[: m + 1])
        if kp < 0.0:
            return k, m + 1
        fp = p * kp ** mu - q * kp
        s = (m ** a1 - (m - alpha) * (m + 1.0) ** alpha) * f[0]
        if m:
            s += np.dot(a[m - 1::-1], f[1: m + 1])
        y = k0 + c_corr * (fp + s)
        if y < 0.0:
            return k, m + 1
        k[m + 1] = y
        f[m + 1] = p * y ** mu - q * y
    return k, -1


def rk4(p, q, mu, k0, h, n):
    fn = rk4_numba if USE_NUMBA else rk4_numpy
    return fn(float(p), float(q), float(mu), float(k0), float(h), int(n))


def abm(p, q, mu, alpha, k0, c_pred, c_corr, b, a, n):
    fn = abm_numba if USE_NUMBA else abm_numpy
    return fn(float(p), float(q), float(mu), float(alpha), float(k0),
              float(c_pred), float(c_corr), b, a, int(n))
