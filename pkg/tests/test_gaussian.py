import math

import numpy as np
import pytest

from hardgadget.gaussian import gamma, gw_argmin, gw_curve, phi, phi_inv
from tests.conftest import tetrachoric_gamma


def series_phi(x: float) -> float:
    """Independent normal CDF: Taylor series Phi(x) = 1/2 + pdf(x) * sum
    x^(2k+1) / (1*3*...*(2k+1))."""
    pdf = math.exp(-0.5 * x * x) / math.sqrt(2 * math.pi)
    term = x
    total = 0.0
    k = 0
    while abs(term) > 1e-18:
        total += term
        k += 1
        term *= x * x / (2 * k + 1)
    return 0.5 + pdf * total


def test_phi_basics():
    assert phi(0.0) == pytest.approx(0.5, abs=1e-15)
    assert phi_inv(0.5) == pytest.approx(0.0, abs=1e-12)
    assert phi_inv(0.0) == -math.inf
    assert phi_inv(1.0) == math.inf
    with pytest.raises(ValueError):
        phi_inv(1.5)


def test_phi_against_series_oracle():
    assert phi(1.6448536269514722) == pytest.approx(0.95, abs=1e-10)
    for x in (-3.0, -1.25, -0.1, 0.4, 2.2, 4.0):
        assert phi(x) == pytest.approx(series_phi(x), abs=1e-14)


def test_phi_inv_roundtrip():
    for a in (1e-6, 1e-4, 0.02425, 0.3, 0.5, 0.77, 0.97575, 1 - 1e-6):
        assert abs(phi(phi_inv(a)) - a) <= 1e-12


def test_gamma_independence():
    assert gamma(0.0, 0.3, 0.5) == pytest.approx(0.15, abs=1e-12)


def test_gamma_perfect_anticorrelation():
    assert gamma(-1.0, 0.7, 0.6) == pytest.approx(0.3, abs=1e-12)
    assert gamma(-1.0, 0.2, 0.3) == 0.0


def test_gamma_median_closed_form():
    expected = 0.25 + math.asin(-0.7) / (2 * math.pi)
    assert gamma(-0.7, 0.5, 0.5) == pytest.approx(expected, abs=1e-8)


def test_gamma_against_tetrachoric_series():
    for rho in (-0.3, -0.7, -0.9):
        for a, b in ((0.5, 0.5), (0.88, 0.88), (0.44, 0.44), (0.3, 0.8), (0.6, 0.95)):
            assert gamma(rho, a, b) == pytest.approx(
                tetrachoric_gamma(rho, a, b), abs=2e-9
            )


def test_gamma_limits():
    assert gamma(-0.5, 0.0, 0.8) == 0.0
    assert gamma(-0.5, 1.0, 0.8) == pytest.approx(0.8, abs=0)
    assert gamma(-0.5, 0.8, 1.0) == pytest.approx(0.8, abs=0)


def test_gamma_domain_errors():
    with pytest.raises(ValueError):
        gamma(0.2, 0.5, 0.5)
    with pytest.raises(ValueError):
        gamma(-0.5, 1.2, 0.5)


def test_gamma_bounds_and_symmetry():
    for rho in (-0.2, -0.7):
        for a in (0.1, 0.45, 0.9):
            for b in (0.2, 0.6, 0.97):
                g = gamma(rho, a, b)
                assert max(0.0, a + b - 1) - 1e-10 <= g <= min(a, b) + 1e-10
                assert g <= a * b + 1e-10  # anticorrelation only hurts
                assert g == pytest.approx(gamma(rho, b, a), abs=2e-10)


def test_gamma_monotone_grid():
    rho = -0.7
    grid = [i / 20 for i in range(21)]
    values = [[gamma(rho, a, b) for b in grid] for a in grid]
    for i in range(21):
        for j in range(20):
            assert values[i][j] <= values[i][j + 1] + 1e-10
            assert values[j][i] <= values[j + 1][i] + 1e-10


def test_gamma_monte_carlo_consistency():
    rng = np.random.default_rng(2024)
    n = 2_000_000
    for rho, a, b in ((-0.7, 0.5, 0.5), (-0.7, 0.88, 0.88), (-0.3, 0.3, 0.7)):
        cov = np.array([[1.0, rho], [rho, 1.0]])
        chol = np.linalg.cholesky(cov)
        z = rng.standard_normal((n, 2)) @ chol.T
        hits = np.mean((z[:, 0] <= phi_inv(a)) & (z[:, 1] <= phi_inv(b)))
        g = gamma(rho, a, b)
        se = math.sqrt(g * (1 - g) / n)
        assert abs(hits - g) <= 4 * se


def test_gw_curve_endpoints_and_argmin():
    assert gw_curve(-1.0) == pytest.approx(1.0, abs=1e-12)
    rho_star, value = gw_argmin()
    assert rho_star == pytest.approx(-0.689, abs=1e-3)
    assert value == pytest.approx(0.8786, abs=1e-3)
