import math
import os
import subprocess

import numpy as np
import pytest

import pointint
from pointint import analysis, dirac, schrodinger


def test_delta_transmission_matches_scatter():
    p = pointint.ConnectionParams(1, 0, 1, 1)
    med = schrodinger.NonRelMedium(1.0, 2.0)
    assert schrodinger.transmission(p, med) == pytest.approx(0.8, rel=1e-15)
    res = pointint.scatter(pointint.as_matrix(p), schrodinger.mode_vectors(med))
    assert res.t_prob == pytest.approx(0.8, rel=1e-14)
    assert res.t_prob + res.r_prob == pytest.approx(1.0, abs=1e-12)


def test_matrices_are_numpy():
    m = pointint.as_matrix(pointint.ConnectionParams(1, 0, 0, 1, math.pi / 2))
    assert isinstance(m, np.ndarray)
    assert m.shape == (2, 2)
    np.testing.assert_allclose(m, 1j * np.eye(2), atol=1e-15)
    p = pointint.decompose(np.array([[0, -1], [1, 0]], dtype=complex))
    assert (p.alpha, p.beta, p.gamma, p.delta) == (0, 1, -1, 0)
    assert p.theta == pytest.approx(math.pi)


def test_three_delta_closed_form_agrees():
    cfg = schrodinger.DeltaTriple(1.5, -2.0, 0.5, 0.3, 0.7)
    med = schrodinger.NonRelMedium(1.2, 0.9, 0.7)
    np.testing.assert_allclose(
        schrodinger.three_delta_transfer(cfg, med),
        schrodinger.closed_form_transfer(cfg, med),
        atol=1e-12,
    )


def test_barrier_limit_identifies_delta_and_epsilon():
    np.testing.assert_allclose(dirac.barrier_limit(dirac.BarrierParams(1, 1)), pointint.delta_connection(2))
    np.testing.assert_allclose(dirac.barrier_limit(dirac.BarrierParams(1, -1)), pointint.epsilon_connection(2))
    c = dirac.classify(dirac.BarrierParams(1.5, -1.5))
    assert c.kind == dirac.BarrierKind.epsilon
    assert c.strength == 3.0


def test_errors_map_to_python_exceptions():
    with pytest.raises(pointint.InvalidParameter):
        pointint.ConnectionParams(2, 0, 0, 1)
    with pytest.raises(pointint.SingularRenormalization):
        schrodinger.renormalized_strengths(pointint.ConnectionParams(-1, 0, 1, -1), 0.1, 1.0)
    with pytest.raises(pointint.Error):
        dirac.free_mode_vectors(1.0, 1.0)


def test_convergence_sweep():
    rows = analysis.nonrel_convergence(pointint.ConnectionParams(2, 1, 1, 1, 0.3), 1.0, 1.0, [1e-3, 1e-4, 1e-5])
    assert [r.x for r in rows] == [1e-3, 1e-4, 1e-5]
    assert analysis.log_log_slope(rows) == pytest.approx(1.0, abs=0.25)
    nonrel, rel = analysis.high_energy_asymptote(pointint.ConnectionParams(1, 1, 0, 1))
    assert nonrel == 0.0
    assert rel == pytest.approx(0.8)


def test_run_cli_in_process():
    code, out, err = pointint.run_cli(["classify", "--s", "1", "--v", "1"])
    assert code == 0
    assert out == "delta strength=2\n"
    code, _, _ = pointint.run_cli(["transmission", "--alpha", "2", "--start", "1", "--stop", "2"])
    assert code == 2


@pytest.mark.skipif("POINTINT_CLI" not in os.environ, reason="CLI binary path not provided")
def test_cli_binary_matches_in_process():
    args = ["compare", "--gamma", "1", "--start", "1e-6", "--stop", "1e6", "--count", "5"]
    proc = subprocess.run([os.environ["POINTINT_CLI"], *args], capture_output=True, text=True, check=True)
    assert proc.stdout == pointint.run_cli(args)[1]
