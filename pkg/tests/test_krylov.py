import numpy as np
import pytest
from hypothesis import given, seed
from hypothesis import strategies as st

from gmreslab import (
    DegenerateImage,
    ProblemInstance,
    ZeroVector,
    arnoldi,
    gmres_residuals,
    min_residual_over_polys,
    optimal_alpha,
    spectral_norm,
)
from conftest import random_complex, random_unit

RELATION_TOL = 1e-10
ORACLE_TOL = 1e-9


def test_arnoldi_identity_breaks_down_immediately():
    dec = arnoldi(np.eye(2, dtype=complex), np.array([1.0, 0.0]), 1)
    assert dec.breakdown_step == 1
    assert dec.hbar.shape == (2, 1)
    assert dec.hbar[1, 0] == 0.0


def test_arnoldi_hand_gram_schmidt():
    # one step from (1,1)/sqrt(2) against diag(1,2):
    #   h00 = 3/2, the defect is (-1,1)/(2 sqrt(2)), so h10 = 1/2
    a = np.diag([1.0, 2.0]).astype(complex)
    r0 = np.array([1.0, 1.0]) / np.sqrt(2.0)
    dec = arnoldi(a, r0, 1)
    assert dec.v.shape == (2, 2)
    assert dec.hbar[0, 0] == pytest.approx(1.5, abs=1e-14)
    assert abs(dec.hbar[1, 0]) == pytest.approx(0.5, abs=1e-14)
    second = np.array([-1.0, 1.0]) / np.sqrt(2.0)
    assert np.allclose(np.abs(dec.v[:, 1]), np.abs(second))


def test_arnoldi_nilpotent_breakdown():
    a = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    dec = arnoldi(a, np.array([0.0, 1.0]), 2)
    assert dec.breakdown_step == 2


def test_arnoldi_rejects_zero_start():
    with pytest.raises(ZeroVector):
        arnoldi(np.eye(3), np.zeros(3), 2)


@seed(13)
@given(st.integers(min_value=2, max_value=9), st.integers(min_value=0, max_value=2**31))
def test_arnoldi_relation_and_orthonormality(n, key):
    rng = np.random.default_rng(key)
    a = random_complex(rng, n)
    r0 = random_unit(rng, n)
    dec = arnoldi(a, r0, n)
    m = dec.m
    v, hbar = dec.v, dec.hbar
    # after a breakdown the rows of hbar past the stored basis are all zero
    assert np.all(hbar[v.shape[1] :, :] == 0.0)
    scale = spectral_norm(a)
    relation = a @ v[:, :m] - v @ hbar[: v.shape[1], :]
    assert np.linalg.norm(relation) <= RELATION_TOL * max(scale, 1.0)
    gram = v.conj().T @ v
    assert np.linalg.norm(gram - np.eye(v.shape[1])) <= 1e-12


def test_gmres_identity_curve():
    inst = ProblemInstance(np.eye(3, dtype=complex), np.array([1.0, 2.0, 2.0]))
    assert np.array_equal(gmres_residuals(inst, 3).ratios, [1.0, 0.0, 0.0, 0.0])


def test_gmres_two_step_values():
    a = np.diag([1.0, 2.0]).astype(complex)
    b = np.array([1.0, 1.0]) / np.sqrt(2.0)
    curve = gmres_residuals(ProblemInstance(a, b), 2)
    assert curve.ratios[1] == pytest.approx(10.0**-0.5, abs=1e-12)
    assert curve.ratios[2] == pytest.approx(0.0, abs=1e-13)


def test_gmres_rejects_zero_residual():
    inst = ProblemInstance(np.eye(2, dtype=complex), np.zeros(2))
    with pytest.raises(ZeroVector):
        gmres_residuals(inst, 1)


def test_gmres_nonzero_initial_guess():
    a = np.diag([1.0, 2.0]).astype(complex)
    x0 = np.array([1.0, 0.0], dtype=complex)
    b = np.array([2.0, 1.0], dtype=complex)
    inst = ProblemInstance(a, b, x0)
    r0 = b - a @ x0
    direct = gmres_residuals(ProblemInstance(a, r0), 2)
    shifted = gmres_residuals(inst, 2)
    assert np.allclose(direct.ratios, shifted.ratios, atol=1e-13)


@seed(17)
@given(st.integers(min_value=2, max_value=8), st.integers(min_value=0, max_value=2**31))
def test_gmres_matches_polynomial_route(n, key):
    """Givens recurrence and explicit least squares agree at every depth."""
    rng = np.random.default_rng(key)
    a = random_complex(rng, n)
    r0 = random_unit(rng, n)
    curve = gmres_residuals(ProblemInstance(a, r0), n)
    assert np.all(np.diff(curve.ratios) <= 1e-13)
    assert curve.ratios[n] <= 1e-10
    for k in range(1, n + 1):
        value, _ = min_residual_over_polys(a, r0, k)
        assert abs(curve.ratios[k] - value) <= ORACLE_TOL


def test_min_residual_identity():
    value, coeffs = min_residual_over_polys(np.eye(3, dtype=complex), np.ones(3), 1)
    assert value == pytest.approx(0.0, abs=1e-13)
    assert coeffs[0] == pytest.approx(-1.0, abs=1e-12)


def test_min_residual_two_point_least_squares():
    a = np.diag([1.0, 2.0]).astype(complex)
    v = np.array([1.0, 1.0]) / np.sqrt(2.0)
    value, coeffs = min_residual_over_polys(a, v, 1)
    assert value == pytest.approx(10.0**-0.5, abs=1e-12)
    assert coeffs[0] == pytest.approx(-0.6, abs=1e-12)


def test_min_residual_eigenvector_is_exact():
    a = np.diag([1.0, 2.0]).astype(complex)
    value, _ = min_residual_over_polys(a, np.array([1.0, 0.0]), 1)
    assert value == pytest.approx(0.0, abs=1e-13)


def test_min_residual_rejects_zero_vector():
    with pytest.raises(ZeroVector):
        min_residual_over_polys(np.eye(2), np.zeros(2), 1)


def test_optimal_alpha_scaled_identity():
    res = optimal_alpha(2.0 * np.eye(3), random_unit(np.random.default_rng(5), 3))
    assert res.alpha_star == pytest.approx(0.5, abs=1e-14)
    assert res.residual_ratio == pytest.approx(0.0, abs=1e-7)


def test_optimal_alpha_two_point():
    a = np.diag([1.0, 2.0]).astype(complex)
    v = np.array([1.0, 1.0]) / np.sqrt(2.0)
    res = optimal_alpha(a, v)
    assert res.alpha_star == pytest.approx(0.6, abs=1e-14)
    assert res.residual_ratio == pytest.approx(10.0**-0.5, abs=1e-13)


def test_optimal_alpha_rotation_makes_no_progress():
    a = np.array([[0.0, 1.0], [-1.0, 0.0]], dtype=complex)
    res = optimal_alpha(a, np.array([1.0, 0.0]))
    assert res.alpha_star == 0.0
    assert res.residual_ratio == pytest.approx(1.0, abs=1e-14)


def test_optimal_alpha_degenerate_image():
    a = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    with pytest.raises(DegenerateImage):
        optimal_alpha(a, np.array([1.0, 0.0]))


@seed(19)
@given(st.integers(min_value=2, max_value=8), st.integers(min_value=0, max_value=2**31))
def test_one_step_identity_is_exact(n, key):
    # ratio^2 + |<Av, v>|^2 / (||Av||^2 ||v||^2) = 1 for the optimal step
    rng = np.random.default_rng(key)
    a = random_complex(rng, n)
    v = random_unit(rng, n)
    res = optimal_alpha(a, v)
    av = a @ v
    cos2 = abs(np.vdot(v, av)) ** 2 / (np.vdot(av, av).real * np.vdot(v, v).real)
    assert abs(res.residual_ratio**2 + cos2 - 1.0) <= 1e-13
    value, _ = min_residual_over_polys(a, v, 1)
    assert abs(res.residual_ratio - value) <= 1e-12
