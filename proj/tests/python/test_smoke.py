import math

import numpy as np
import pytest

import binom


def test_state_matches_binomial_weights():
    v = binom.gbs_state(binom.GbsParams(2, 0.5, 0.0))
    assert v.dtype == np.complex128
    np.testing.assert_allclose(v, [0.5, 1 / math.sqrt(2), 0.5], atol=1e-15)
    padded = binom.gbs_state(binom.GbsParams(2, 0.5, 0.0), dim=5)
    assert padded.shape == (5,)
    assert padded[3] == 0


def test_invalid_parameters_raise():
    with pytest.raises(ValueError):
        binom.GbsParams(2, 1.5, 0.0)
    with pytest.raises(ValueError):
        binom.gbs_state(binom.GbsParams(3, 0.5, 0.0), dim=2)


def test_partner_is_orthogonal():
    a = binom.GbsParams(7, 0.3, 1.1)
    b = binom.orthogonal_partner(a)
    assert abs(b.p - 0.7) < 1e-15
    assert abs(binom.gbs_overlap(a, b)) < 1e-12
    direct = np.vdot(binom.gbs_state(a), binom.gbs_state(b))
    assert abs(direct) < 1e-12


def test_rotation_and_delta_basis():
    a = binom.GbsParams(5, 0.4, 2.0)
    r = binom.rotation_operator(5, binom.params_to_angles(a))
    np.testing.assert_allclose(r @ r.conj().T, np.eye(6), atol=1e-12)
    top = np.zeros(6)
    top[5] = 1
    assert abs(abs(np.vdot(binom.gbs_state(a), r @ top)) - 1) < 1e-10
    basis = binom.delta_basis(5, 0.4, 2.0)
    np.testing.assert_allclose(basis.conj().T @ basis, np.eye(6), atol=1e-10)
    ops = binom.rotated_operators(5, 0.4, 2.0)
    for m in range(6):
        np.testing.assert_allclose(ops["j3"] @ basis[:, m], (m - 2.5) * basis[:, m], atol=1e-9)


def test_resolution_and_reconstruction():
    quad = binom.SphereQuadrature.default_for(6)
    op, under = binom.identity_resolution(6, quad)
    assert not under
    np.testing.assert_allclose(op, np.eye(7), atol=1e-12)
    rng = np.random.default_rng(3)
    psi = rng.normal(size=7) + 1j * rng.normal(size=7)
    psi /= np.linalg.norm(psi)
    np.testing.assert_allclose(binom.reconstruct(psi, 6, quad), psi, atol=1e-10)


def test_squeezing_scan():
    ps = np.linspace(0, 1, 21)
    phis = np.linspace(0, 2 * math.pi, 21)
    closed = binom.squeeze_scan(2, ps, phis)
    direct = binom.squeeze_scan(2, ps, phis, source="direct")
    assert closed.shape == (441, 4)
    np.testing.assert_allclose(closed, direct, atol=1e-10)
    assert closed[:, 2].max() > 0
    assert not np.any((closed[:, 2] > 1e-12) & (closed[:, 3] > 1e-12))
    sx, sp = binom.closed_form_indexes(1, 0.5, 0.0)
    assert abs(sx) < 1e-15 and abs(sp + 1) < 1e-15
    with pytest.raises(ValueError):
        binom.squeeze_scan(2, ps, phis, source="bogus")


def test_atomic_states_match():
    a = binom.GbsParams(4, 0.25, 0.9)
    np.testing.assert_allclose(binom.cas_state(4, binom.params_to_angles(a)), binom.gbs_state(a), atol=1e-12)
    angles = binom.BlochAngles(2.0, 0.7)
    np.testing.assert_allclose(
        binom.disentangled_rotation(6, angles), binom.cas_rotation(6, angles), atol=1e-12
    )


def test_verify_report():
    report = binom.verify(groups=["overlap", "completeness"], N=4)
    assert report["passed"] is True
    assert [g["name"] for g in report["groups"]] == ["overlap", "completeness"]
    assert "bijection" in binom.verify_groups()
    assert binom.verify(tolerance=1e-16, groups=["completeness"])["passed"] is False
