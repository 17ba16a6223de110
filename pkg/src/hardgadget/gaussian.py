"""Standard-normal CDF/quantile and the anticorrelated quadrant probability.

``gamma(rho, a, b)`` is the probability that a pair of standard Gaussians
with correlation rho (rho in [-1, 0]) falls below the a- and b-quantiles
respectively.  It is evaluated by one-dimensional adaptive quadrature of

    integral_{-inf}^{Phi^{-1}(a)}  pdf(x) * Phi((Phi^{-1}(b) - rho*x) / sqrt(1-rho^2)) dx

with the rho = 0 and rho = -1 limits short-circuited to their closed forms.
"""

from __future__ import annotations

import math

from scipy.integrate import quad

DEFAULT_TOL = 1e-10
_TAIL_CUTOFF = -8.5  # Phi(-8.5) < 1e-17, far below any supported tolerance

_SQRT2 = math.sqrt(2.0)
_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


def phi(x: float) -> float:
    """Standard normal CDF."""
    return 0.5 * math.erfc(-x / _SQRT2)


def phi_pdf(x: float) -> float:
    return math.exp(-0.5 * x * x) / _SQRT_TWO_PI


# Acklam's rational approximation to the normal quantile (abs rel err < 1.2e-9),
# then one Halley step brings it to full double precision.
_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
      1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
      6.680131188771972e+01, -1.328068155288572e+01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
      -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
      3.754408661907416e+00)


def phi_inv(a: float) -> float:
    """Normal quantile; phi_inv(0) = -inf and phi_inv(1) = +inf."""
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"quantile argument {a} outside [0, 1]")
    if a == 0.0:
        return -math.inf
    if a == 1.0:
        return math.inf
    p_low = 0.02425
    if a < p_low:
        q = math.sqrt(-2.0 * math.log(a))
        x = ((((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5])
             / ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0))
    elif a <= 1.0 - p_low:
        q = a - 0.5
        r = q * q
        x = ((((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]) * q
             / (((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0))
    else:
        q = math.sqrt(-2.0 * math.log(1.0 - a))
        x = -((((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5])
              / ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0))
    # Halley refinement
    e = phi(x) - a
    u = e * _SQRT_TWO_PI * math.exp(0.5 * x * x)
    return x - u / (1.0 + 0.5 * x * u)


def _check_gamma_args(rho: float, a: float, b: float) -> None:
    if not -1.0 <= rho <= 0.0:
        raise ValueError(f"correlation {rho} outside [-1, 0]")
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"quantile level a={a} outside [0, 1]")
    if not 0.0 <= b <= 1.0:
        raise ValueError(f"quantile level b={b} outside [0, 1]")


def gamma(rho: float, a: float, b: float, tolerance: float = DEFAULT_TOL) -> float:
    """P[x <= Phi^{-1}(a) and y <= Phi^{-1}(b)] for rho-correlated Gaussians."""
    _check_gamma_args(rho, a, b)
    if a == 0.0 or b == 0.0:
        return 0.0
    if a == 1.0:
        return b
    if b == 1.0:
        return a
    if rho == 0.0:
        return a * b
    if rho == -1.0:
        return max(0.0, a + b - 1.0)

    hi = phi_inv(a)
    if hi <= _TAIL_CUTOFF:
        return 0.0
    qb = phi_inv(b)
    denom = math.sqrt(1.0 - rho * rho)

    def integrand(x: float) -> float:
        return phi_pdf(x) * phi((qb - rho * x) / denom)

    value, err = quad(integrand, _TAIL_CUTOFF, hi, epsabs=0.25 * tolerance,
                      epsrel=1e-13, limit=200)
    if err > tolerance:
        raise ArithmeticError(f"quadrature error estimate {err} exceeds tolerance {tolerance}")
    return min(max(value, 0.0), 1.0)


def gw_curve(rho: float) -> float:
    """(arccos rho / pi) / ((1 - rho) / 2), the cut ratio curve on [-1, 0]."""
    if not -1.0 <= rho <= 0.0:
        raise ValueError(f"correlation {rho} outside [-1, 0]")
    return (math.acos(rho) / math.pi) / ((1.0 - rho) / 2.0)


def gw_argmin(grid_step: float = 1e-3, refine_tol: float = 1e-5) -> tuple[float, float]:
    """Minimizer of gw_curve over [-1, 0]: coarse grid, then golden-section."""
    steps = round(1.0 / grid_step)
    best_i = min(range(steps + 1), key=lambda i: gw_curve(-1.0 + i * grid_step))
    lo = max(-1.0, -1.0 + (best_i - 1) * grid_step)
    hi = min(0.0, -1.0 + (best_i + 1) * grid_step)

    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1, f2 = gw_curve(x1), gw_curve(x2)
    while hi - lo > refine_tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = gw_curve(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = gw_curve(x2)
    mid = 0.5 * (lo + hi)
    return mid, gw_curve(mid)
