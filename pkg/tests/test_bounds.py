import numpy as np
import pytest
from hypothesis import given, seed
from hypothesis import strategies as st

from gmreslab import (
    ChainSlacks,
    elman_bound,
    fov_summary,
    starke_bound,
    verify_chain,
)
from conftest import random_complex, random_nonsingular

SQRT3_OVER_2 = np.sqrt(3.0) / 2.0
SQRT_HALF = np.sqrt(0.5)
ORDER_TOL = 1e-12
UNITARY_TOL = 1e-8


def test_elman_identity():
    assert elman_bound(np.eye(3), 1) == pytest.approx(0.0, abs=1e-14)


def test_elman_two_point_diagonal():
    a = np.diag([1.0, 2.0])
    assert elman_bound(a, 1) == pytest.approx(SQRT3_OVER_2, abs=1e-12)
    assert elman_bound(a, 2) == pytest.approx(0.75, abs=1e-12)


def test_elman_none_without_definite_hermitian_part():
    rotation = np.array([[0.0, 1.0], [-1.0, 0.0]])
    assert elman_bound(rotation, 1) is None
    indefinite = np.diag([1.0, -1.0])
    assert elman_bound(indefinite, 1) is None


def test_starke_identity():
    assert starke_bound(np.eye(2), 1) == pytest.approx(0.0, abs=1e-14)


def test_starke_two_point_diagonal():
    assert starke_bound(np.diag([1.0, 2.0]), 1) == pytest.approx(
        SQRT_HALF, abs=1e-9
    )


def test_starke_is_one_when_origin_in_fov():
    a = np.diag([1.0j, -1.0j])
    assert starke_bound(a, 1) == pytest.approx(1.0, abs=1e-12)
    assert starke_bound(a, 3) == pytest.approx(1.0, abs=1e-12)


def test_starke_jordan_block(jordan_block):
    assert starke_bound(jordan_block, 1) == pytest.approx(
        SQRT3_OVER_2, abs=1e-9
    )


def test_bounds_shrink_with_depth():
    a = np.diag([1.0, 2.0]) + 0.1 * np.eye(2, k=1)
    for fn in (elman_bound, starke_bound):
        values = [fn(a, k) for k in (1, 2, 3, 4)]
        for lo, hi in zip(values[1:], values):
            assert 0.0 <= lo <= hi <= 1.0


@seed(11)
@given(st.integers(min_value=0, max_value=2**31))
def test_starke_never_exceeds_elman(key):
    rng = np.random.default_rng(key)
    a = random_complex(rng, int(rng.integers(2, 7)))
    for k in (1, 2):
        elman = elman_bound(a, k)
        if elman is None:
            continue
        assert starke_bound(a, k) <= elman + ORDER_TOL


@seed(13)
@given(st.integers(min_value=0, max_value=2**31))
def test_bounds_invariant_under_unitary_similarity(key):
    rng = np.random.default_rng(key)
    n = int(rng.integers(2, 6))
    a = random_complex(rng, n)
    q, _ = np.linalg.qr(
        rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    )
    b = q @ a @ q.conj().T
    assert starke_bound(b, 2) == pytest.approx(
        starke_bound(a, 2), abs=UNITARY_TOL
    )
    ea, eb = elman_bound(a, 2), elman_bound(b, 2)
    assert (ea is None) == (eb is None)
    if ea is not None:
        assert eb == pytest.approx(ea, abs=UNITARY_TOL)


def test_verify_chain_two_point_diagonal():
    a = np.diag([1.0, 2.0])
    report = verify_chain(a, 1, trials=6)
    assert report.all_passed
    assert report.k == 1
    assert len(report.gmres_ratios) == 6
    assert report.ideal == pytest.approx(1.0 / 3.0, abs=1e-5)
    assert report.starke_rhs == pytest.approx(SQRT_HALF, abs=1e-9)
    assert report.elman_rhs == pytest.approx(SQRT3_OVER_2, abs=1e-12)
    assert report.nu_a == pytest.approx(1.0, abs=1e-9)
    assert report.nu_ainv == pytest.approx(0.5, abs=1e-9)
    assert report.lambda_min_m == pytest.approx(1.0, abs=1e-12)
    assert report.lambda_max_aha == pytest.approx(4.0, abs=1e-10)
    assert set(report.verdicts) == {
        "gmres_le_worst_case",
        "worst_case_le_ideal",
        "ideal_le_starke",
        "ideal_le_elman",
        "starke_le_elman",
    }


def test_verify_chain_jordan_block(jordan_block):
    report = verify_chain(jordan_block, 1, trials=4)
    assert report.all_passed
    assert report.nu_a == pytest.approx(0.5, abs=1e-9)
    assert report.nu_ainv == pytest.approx(0.5, abs=1e-9)
    assert report.starke_rhs == pytest.approx(SQRT3_OVER_2, abs=1e-9)
    assert report.elman_rhs is not None
    assert report.starke_rhs <= report.elman_rhs


def test_verify_chain_skips_elman_verdicts_without_pd_part():
    rotation = np.array([[0.0, 1.0], [-1.0, 0.0]])
    report = verify_chain(rotation, 1, trials=3)
    assert report.elman_rhs is None
    assert set(report.verdicts) == {
        "gmres_le_worst_case",
        "worst_case_le_ideal",
        "ideal_le_starke",
    }
    assert report.all_passed


def test_verify_chain_margins_match_values():
    a = np.diag([1.0, 2.0, 3.0])
    report = verify_chain(a, 2, trials=5)
    assert report.verdicts["ideal_le_starke"].margin == pytest.approx(
        report.starke_rhs - report.ideal, abs=1e-15
    )
    assert report.verdicts["worst_case_le_ideal"].margin == pytest.approx(
        report.ideal - report.worst_case, abs=1e-15
    )
    assert max(report.gmres_ratios) <= report.worst_case + 1e-6
    assert report.worst_case <= report.ideal + 1e-6
    assert report.ideal_lower <= report.ideal


def test_verify_chain_deterministic():
    rng = np.random.default_rng(71)
    a = random_nonsingular(rng, 5)
    first = verify_chain(a, 2, trials=4)
    second = verify_chain(a, 2, trials=4)
    assert first.gmres_ratios == second.gmres_ratios
    assert first.worst_case == second.worst_case
    assert first.ideal == second.ideal


def test_verify_chain_respects_precomputed_fov():
    a = np.diag([1.0, 2.0])
    data = fov_summary(a)
    report = verify_chain(a, 1, trials=3, fov_data=data)
    assert report.nu_a == data.nu_a
    assert report.nu_ainv == data.nu_ainv


def test_negative_slack_forces_failure():
    a = np.diag([1.0, 2.0])
    hostile = ChainSlacks(gmres_vs_worst=-1.0)
    report = verify_chain(a, 1, trials=3, slacks=hostile)
    assert not report.verdicts["gmres_le_worst_case"].passed
    assert not report.all_passed


def test_verify_chain_rejects_bad_arguments():
    a = np.diag([1.0, 2.0])
    with pytest.raises(ValueError):
        verify_chain(a, 0, trials=3)
    with pytest.raises(ValueError):
        verify_chain(a, 1, trials=0)


def test_report_to_dict_shape():
    a = np.diag([1.0, 2.0])
    doc = verify_chain(a, 1, trials=3).to_dict()
    assert doc["k"] == 1
    assert set(doc["gmres"]) == {"ratios", "min", "median", "max"}
    assert doc["gmres"]["min"] <= doc["gmres"]["median"] <= doc["gmres"]["max"]
    assert doc["elman_rhs"] is not None
    for verdict in doc["verdicts"].values():
        assert set(verdict) == {"passed", "margin"}
        assert isinstance(verdict["passed"], bool)
