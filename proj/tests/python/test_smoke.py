import math

import numpy as np
import pytest

import xychain as xy


def test_plain_chain_times():
    tt = xy.transfer_times(0.0)
    assert tt.t_3to1 == pytest.approx(xy.T0, rel=1e-14)
    assert tt.period == pytest.approx(2 * xy.T0, rel=1e-14)


def test_propagator_is_unitary_and_matches_expm():
    for lam in (0.0, 1.5, 4.0):
        u = xy.propagate_analytic(lam, 0.37)
        assert np.linalg.norm(u.conj().T @ u - np.eye(8)) < 1e-12
        h = xy.build_h_xy3(lam)
        assert np.linalg.norm(u - xy.expm_hermitian_generator(h, 0.37)) < 1e-10


def test_threshold():
    assert abs(xy.find_speedup_threshold() - 2.71199) < 1e-4


def test_transfer_moves_the_excitation():
    tt = xy.transfer_times(1.5)
    psi = xy.evolve_pure(1.5, 1.0, 0.0, 1, tt.t_3to1)  # |001> -> -|100>
    assert abs(abs(psi[4]) - 1.0) < 1e-10


def test_compiled_sequences_replay():
    tt = xy.transfer_times(1.5)
    uc = xy.compile_uc(1.5, tt.t_3to1, "plus")
    ref = xy.expm_hermitian_generator(xy.build_c(1.5), tt.t_3to1)
    assert xy.dist_up_to_global_phase(xy.simulate_sequence(uc), ref) < 1e-9

    ud = xy.compile_ud(1.5, tt.t_3to1, "minus")
    full = xy.concatenate(uc, ud)
    target = xy.propagate_analytic(1.5, tt.t_3to1)
    assert xy.dist_up_to_global_phase(xy.simulate_sequence(full), target) < 1e-9
    assert "ROT" in uc.to_text()


def test_overlap_trace_normalization():
    grid = [i * 2 * xy.T0 / 100 for i in range(101)]
    rep = xy.overlap_trace(0.0, "x", grid)
    for _, cs, cm, ct in rep["rows"]:
        assert cs * cs + cm * cm + ct * ct == pytest.approx(1.0, abs=1e-10)
    assert rep["peak_target_t"] == pytest.approx(xy.T0, rel=1e-9)


def test_duration_estimate():
    tt = xy.transfer_times(1.5)
    est = xy.estimate_duration(xy.compile_uc(1.5, tt.t_3to1, "plus"), xy.NmrParams.tce())
    assert est["d6"] == pytest.approx(19.68e-3, rel=2e-3)
    assert abs(est["total_seconds"] - 0.340) / 0.340 < 0.30


def test_bell_phases():
    recs = xy.bell_transfer(2.0)
    sym = next(r for r in recs if r["input"] == "01+10")
    assert sym["phase"] == pytest.approx(1j, abs=1e-12)
