"""End-to-end smoke tests for the python binding."""

import math

import numpy as np
import pytest

import nrbounds as nrb


def test_radii_on_closed_forms():
    assert nrb.numerical_radius(np.eye(3)) == pytest.approx(1.0, abs=1e-10)
    jordan = np.array([[0.0, 1.0], [0.0, 0.0]])
    assert nrb.numerical_radius(jordan) == pytest.approx(0.5, abs=1e-10)
    assert nrb.operator_norm(jordan) == pytest.approx(1.0, abs=1e-12)
    assert nrb.spectral_radius(jordan) == 0.0

    summary = nrb.spectral_summary(np.diag([3.0, 0.5j]))
    assert summary["numerical_radius"] == pytest.approx(3.0, abs=1e-9)
    assert summary["operator_norm"] == pytest.approx(3.0, abs=1e-12)
    assert summary["spectral_radius"] == pytest.approx(3.0, rel=1e-8)


def test_complex_input_and_hermitian_helpers():
    h = np.array([[2.0, 1j], [-1j, 2.0]])
    ev = nrb.hermitian_eigenvalues(h)
    assert ev == pytest.approx([1.0, 3.0], abs=1e-12)

    a = nrb.abs_value(np.array([[0.0, 1.0], [0.0, 0.0]]))
    assert a == pytest.approx(np.diag([0.0, 1.0]), abs=1e-12)

    root = nrb.psd_power(np.diag([4.0, 9.0]).astype(complex), 0.5)
    assert root == pytest.approx(np.diag([2.0, 3.0]), abs=1e-12)


def test_pair_bounds_match_reference_dataset():
    a = np.array([[4.0, 1.0], [3.0, 3.0]])
    b = np.array([[4.0, 1.0], [-3.0, -1.0]])
    rep = nrb.pair_bounds(a, b)
    assert rep["lemma21"] == pytest.approx(9.567, abs=5e-3)
    assert rep["lemma22"] == pytest.approx(9.10612, abs=5e-3)
    assert rep["reference"] >= rep["lemma21"]

    x = np.array([-1.0, 1.0]) / math.sqrt(2.0)
    y = np.array([-4.0, -1.0]) / math.sqrt(17.0)
    val = nrb.inner_sum(a, b, x, y)
    assert val == pytest.approx(7.20294057598537, abs=1e-9)
    assert val <= rep["lemma22"] + 1e-12


def test_block_and_two_by_two_reports():
    t = np.array(
        [
            [-3.0, 2.0, -1.0, -1.0],
            [-2.0, 2.0, 3.0, -1.0],
            [-2.0, 3.0, 3.0, -2.0],
            [1.0, 1.0, 0.0, -2.0],
        ]
    )
    rep = nrb.block_bounds(t, [2, 2])
    w = nrb.numerical_radius(t)
    assert w <= rep["omega_alpha"] + 1e-9
    assert rep["omega_alpha"] <= rep["omega_abu_omar"] + 1e-9
    assert rep["omega_abu_omar"] <= rep["omega_hou"] + 1e-9
    assert rep["alpha"].shape == (2, 2)

    two = nrb.two_by_two_bounds(t[:2, :2], t[:2, 2:], t[2:, :2], t[2:, 2:])
    assert two["hirzallah"] is not None
    assert w <= two["cor1"] + 1e-9
    assert w <= two["cor2"] + 1e-9

    rect = nrb.two_by_two_bounds(
        np.eye(1), np.ones((1, 2)), np.ones((2, 1)), np.eye(2)
    )
    assert rect["hirzallah"] is None


def test_row_self_and_spectral_sum():
    a = np.array([[3.0, 2.0], [-1.0, -3.0]])
    b = np.array([[1.0, 1.0], [1.0, -1.0]])
    row = nrb.row_bounds(a, b)
    assert row["sh1"] == pytest.approx(3.19774, abs=5e-3)
    assert row["sh2"] == pytest.approx(4.64893, abs=5e-3)

    self_rep = nrb.self_bounds(np.array([[-4.0, 7.0], [-4.0, -8.0]]))
    assert self_rep["c7"] == pytest.approx(9.74488, abs=5e-3)
    assert self_rep["kittaneh"] == pytest.approx(9.9823, abs=5e-3)
    assert self_rep["c8"] <= self_rep["c7"]

    ssum = nrb.spectral_sum_bounds([a], [b])
    assert ssum["r_direct"] <= ssum["omega_gamma"] + 1e-8
    assert ssum["gamma"].shape == (1, 1)


def test_oracle_and_sampler():
    rng_matrix = nrb.sample("complex-gaussian", 5, seed=7)
    assert rng_matrix.shape == (5, 5)
    again = nrb.sample("complex-gaussian", 5, seed=7)
    assert np.array_equal(rng_matrix, again)

    r1 = nrb.spectral_radius(rng_matrix)
    r2 = nrb.oracle_spectral_radius(rng_matrix)
    assert r1 == pytest.approx(r2, rel=1e-6)

    q = nrb.sample("unitary", 4, seed=3)
    assert np.allclose(q.conj().T @ q, np.eye(4), atol=1e-12)

    u = nrb.sample("unit-vector", 6, seed=1)
    assert np.linalg.norm(u) == pytest.approx(1.0, abs=1e-12)

    with pytest.raises(ValueError):
        nrb.sample("no-such-kind", 3)


def test_suite_and_repro():
    report = nrb.run_suite(trials=3, dim_lo=2, dim_hi=3, seed=11)
    assert report["trials"] == 3
    assert report["failures"] == []
    assert set(report["stats"]) == set(nrb.all_check_names())
    assert len(nrb.all_check_names()) == 21

    partial = nrb.run_suite(trials=2, seed=5, checks=["cauchy-schwarz", "sandwich"])
    assert set(partial["stats"]) == {"cauchy-schwarz", "sandwich"}

    with pytest.raises(ValueError):
        nrb.run_suite(trials=1, checks=["bogus"])

    cases = nrb.run_repro()
    assert len(cases) == 7
    by_id = {c["id"]: c for c in cases}
    # Every printed figure reproduces except the one published slip.
    assert not by_id["shebrawi3-remark"]["passed"]
    for cid, case in by_id.items():
        if cid != "shebrawi3-remark":
            assert case["passed"], cid


def test_error_mapping():
    with pytest.raises(ValueError):
        nrb.numerical_radius(np.ones((2, 3)))
    with pytest.raises(ValueError):
        nrb.numerical_radius(np.array([[np.inf, 0.0], [0.0, 0.0]]))
    with pytest.raises(ValueError):
        nrb.psd_power(np.diag([1.0, -1.0]).astype(complex), 0.5)
