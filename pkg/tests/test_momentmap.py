import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lagorb import _kernels
from lagorb import momentmap as mm
from lagorb.algebras import compact_algebra
from lagorb.representations import (
    defining_rep,
    direct_sum,
    highest_weight_vector,
    spin_rep,
    sym_power,
    wedge_power,
)


def su(n):
    return defining_rep(compact_algebra("su", n))


PROBE_REPS = {
    "su2": lambda: su(2),
    "sym2 su4": lambda: sym_power(su(4), 2),
    "wedge3 su6": lambda: wedge_power(su(6), 3),
    "wedge2 su5 + 2 su5": lambda: direct_sum([wedge_power(su(5), 2), su(5)], [1, 2]),
    "spin11": lambda: spin_rep(11),
}


def horizontal_direction(rng, v):
    u = rng.normal(size=v.size) + 1j * rng.normal(size=v.size)
    u = u - np.vdot(v, u) * v
    return u / np.linalg.norm(u)


def curve(v, u, t):
    w = v + t * u
    return w / np.linalg.norm(w)


# -- oracle: su(2) on P^1 has |mu|^2 = 1/2 everywhere ------------------------------

@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_su2_moment_norm_is_constant(seed):
    # X_a = i sigma_a / sqrt(2); mu_a = <sigma_a>/sqrt(2), sum <sigma_a>^2 = 1
    p = mm.random_point(2, np.random.default_rng(seed))
    assert abs(mm.moment_norm_sq(su(2), p) - 0.5) < 1e-12


def test_su2_flow_reports_no_lagrangian_orbit():
    res = mm.kempf_ness_flow(su(2), seed=3)
    assert not res.converged
    assert abs(res.final_norm ** 2 - 0.5) < 1e-6


# -- moment map condition and equivariance ---------------------------------------

@pytest.mark.parametrize("name", sorted(PROBE_REPS))
def test_moment_condition_by_finite_differences(name):
    rep = PROBE_REPS[name]()
    rng = np.random.default_rng(7)
    h = 1e-5
    for _ in range(10):
        p = mm.random_point(rep.dim_v, rng)
        v = p.vector
        u = horizontal_direction(rng, v)
        fd = (mm.moment(rep, curve(v, u, h)).coeffs - mm.moment(rep, curve(v, u, -h)).coeffs) / (2 * h)
        exact = np.array([mm.fubini_study_omega(u, mm.fundamental_field(rep, p, e), p)
                          for e in np.eye(rep.algebra.dim)])
        assert np.abs(fd - exact).max() < 1e-6 * max(np.abs(exact).max(), 1.0)


@pytest.mark.parametrize("name", sorted(PROBE_REPS))
def test_equivariance(name):
    rep = PROBE_REPS[name]()
    rng = np.random.default_rng(11)
    for _ in range(5):
        p = mm.random_point(rep.dim_v, rng)
        y = rng.normal(size=rep.algebra.dim)
        lhs = mm.moment(rep, mm.act(rep, y, p)).coeffs
        rhs = mm.adjoint_action(rep, y, mm.moment(rep, p).coeffs)
        assert np.abs(lhs - rhs).max() < 1e-9


@pytest.mark.parametrize("name", sorted(PROBE_REPS))
def test_gradient_by_central_differences(name):
    rep = PROBE_REPS[name]()
    rng = np.random.default_rng(5)
    h = 1e-5
    for _ in range(5):
        p = mm.random_point(rep.dim_v, rng)
        v = p.vector
        g = mm.grad_moment_norm_sq(rep, p)
        assert abs(np.vdot(v, g)) < 1e-12
        u = horizontal_direction(rng, v)
        fd = (mm.moment_norm_sq(rep, curve(v, u, h)) - mm.moment_norm_sq(rep, curve(v, u, -h))) / (2 * h)
        exact = float(np.real(np.vdot(g, u)))
        assert abs(fd - exact) < 1e-5 * max(abs(exact), np.linalg.norm(g), 1e-3)


def test_moment_is_phase_invariant():
    rep = sym_power(su(3), 2)
    v = np.random.default_rng(0).normal(size=6) + 0j
    a = mm.moment(rep, v).coeffs
    b = mm.moment(rep, np.exp(0.7j) * 3.0 * v).coeffs
    assert np.allclose(a, b, atol=1e-14)


def test_projective_point_rejects_zero():
    with pytest.raises(ValueError):
        mm.ProjectivePoint(np.zeros(3))


def test_omega_needs_horizontal_vectors():
    p = mm.ProjectivePoint(np.array([1, 0, 0]))
    with pytest.raises(mm.NotHorizontalError):
        mm.fubini_study_omega(np.array([1, 0, 0]), np.array([0, 1, 0]), p)
    assert mm.fubini_study_omega(np.array([0, 1, 0]), np.array([0, 1j, 0]), p) == pytest.approx(2.0)


# -- rank determination ------------------------------------------------------------

def test_numerical_rank_with_clear_gap():
    assert mm.numerical_rank(np.array([3.0, 1.0, 1e-12, 0.0])) == 2
    assert mm.numerical_rank(np.zeros(3)) == 0


def test_numerical_rank_without_gap_raises():
    with pytest.raises(mm.IllConditionedRankError) as err:
        mm.numerical_rank(np.array([1.0, 1.1e-8, 0.9e-8]))
    assert len(err.value.spectrum) == 3


# -- flow --------------------------------------------------------------------------

def test_flow_history_is_monotone_and_deterministic():
    rep = wedge_power(su(6), 3)
    a = mm.kempf_ness_flow(rep, seed=4, tol=1e-10)
    b = mm.kempf_ness_flow(rep, seed=4, tol=1e-10)
    assert a.converged
    assert np.all(np.diff(a.norm_history) <= 1e-15)
    assert a.norm_history == b.norm_history
    assert np.array_equal(a.final_point.vector, b.final_point.vector)


def test_flow_max_iter_is_reported():
    res = mm.kempf_ness_flow(wedge_power(su(7), 3), seed=0, tol=1e-14, max_iter=3)
    assert not res.converged and res.iterations == 3
    assert "max_iter" in res.message


def test_flow_on_sym2_reaches_lagrangian_point():
    rep = sym_power(su(3), 2)
    res = mm.kempf_ness_flow(rep, seed=2, tol=1e-12)
    assert res.converged
    cert = mm.verify_lagrangian(rep, res.final_point)
    assert cert.passed
    assert mm.real_isotropy(rep, res.final_point).dim == 3


def test_numpy_and_numba_backends_agree(monkeypatch):
    rep = spin_rep(11)
    rng = np.random.default_rng(9)
    v = mm.random_point(rep.dim_v, rng).vector
    c = rng.normal(size=rep.algebra.dim)
    op = rep.operator
    assert np.allclose(_kernels.numpy_moment_coeffs(op.mats, v), _kernels.numba_moment_coeffs(*op.coo, op.d, v),
                       atol=1e-13)
    assert np.allclose(_kernels.numpy_weighted_apply(op.mats, c, v),
                       _kernels.numba_weighted_apply(*op.coo, c, v), atol=1e-13)
    assert np.allclose(_kernels.numpy_action_columns(op.mats, v),
                       _kernels.numba_action_columns(*op.coo, op.d, v), atol=1e-13)
    runs = {}
    for flag in (False, True):
        monkeypatch.setattr(_kernels, "USE_NUMBA", flag)
        runs[flag] = mm.kempf_ness_flow(rep, seed=0, tol=1e-10)
    assert runs[False].iterations == runs[True].iterations
    assert abs(runs[False].final_norm - runs[True].final_norm) < 1e-12


# -- isotropy and certificates ------------------------------------------------------

def test_isotropy_at_identity_in_sym2():
    rep = sym_power(su(4), 2)
    p = rep.from_tensor(np.eye(4))
    real = mm.real_isotropy(rep, p)
    cplx = mm.complex_isotropy(rep, p)
    assert real.triple() == (6, 2, 0)
    assert cplx.dim == 6 and cplx.orbit_dim == 9
    assert mm.is_open_orbit(rep, p)
    # basis matrices of the stabilizer fix the line
    v = mm.as_point(p).vector
    for m in real.basis_matrices:
        w = m @ v
        assert np.linalg.norm(w - np.vdot(v, w) * v) < 1e-12


def test_highest_weight_point_is_not_lagrangian():
    rep = wedge_power(su(6), 3)
    p = highest_weight_vector(rep)
    cert = mm.verify_lagrangian(rep, p)
    assert not cert.passed and cert.mu_norm > 0.1
    assert not mm.is_open_orbit(rep, p)
    assert cert.to_dict()["pass"] is False


def test_minimality_fails_off_the_zero_level():
    rep = sym_power(su(4), 2)
    p = mm.ProjectivePoint(rep.from_tensor(np.eye(4)))
    assert mm.check_minimal(rep, p)
    x = np.random.default_rng(0).normal(size=rep.algebra.dim)
    assert not mm.check_minimal(rep, mm.act(rep, 1j * x, p, 0.1))
