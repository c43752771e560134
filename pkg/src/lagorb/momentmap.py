"""Moment map of a unitary action on P(V), its gradient flow, and isotropy.

Conventions at a unit vector ``v`` representing ``[v]``:

* ``mu([v])(X_a) = Im(v^H rho(X_a) v)``, the coefficient of the moment map
  in the orthonormal algebra basis.
* tangent vectors are horizontal lifts ``u`` with ``v^H u = 0``; the
  fundamental field of ``X`` is ``rho(X) v - (v^H rho(X) v) v``.
* the Kahler form is ``omega(u, w) = 2 Im(u^H w)`` and the complex structure
  is multiplication by ``i``. This is the scaling under which
  ``d mu(u)(X) = omega(u, X_hat)`` holds for the moment map above.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from . import _kernels
from .representations import Representation, canonical_phase


class IllConditionedRankError(ValueError):
    def __init__(self, message, spectrum):
        super().__init__(message)
        self.spectrum = spectrum


class NotHorizontalError(ValueError):
    pass


RANK_RTOL = 1e-8
RANK_GAP = 0.1


@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    vector: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vector, dtype=np.complex128)
        nrm = np.linalg.norm(v)
        if v.ndim != 1 or nrm < 1e-12:
            raise ValueError("a projective point needs a non-zero vector")
        v = canonical_phase(v / nrm)
        v.setflags(write=False)
        object.__setattr__(self, "vector", v)

    @property
    def dim(self) -> int:
        return len(self.vector)


def as_point(p) -> ProjectivePoint:
    return p if isinstance(p, ProjectivePoint) else ProjectivePoint(p)


def random_point(dim: int, rng: np.random.Generator) -> ProjectivePoint:
    """Uniform on the unit sphere of C^dim."""
    return ProjectivePoint(rng.normal(size=dim) + 1j * rng.normal(size=dim))


@dataclass(frozen=True)
class MomentValue:
    coeffs: np.ndarray

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))


def moment(rep: Representation, p) -> MomentValue:
    v = as_point(p).vector
    return MomentValue(_kernels.moment_coeffs(rep.operator, v))


def moment_norm_sq(rep: Representation, p) -> float:
    c = moment(rep, p).coeffs
    return float(c @ c)


def fundamental_field(rep: Representation, p, x) -> np.ndarray:
    v = as_point(p).vector
    w = rep.element(x) @ v
    return w - np.vdot(v, w) * v


def horizontal(p, u) -> np.ndarray:
    v = as_point(p).vector
    return u - np.vdot(v, u) * v


def fubini_study_omega(u, w, p=None, tol=1e-10) -> float:
    if p is not None:
        v = as_point(p).vector
        if abs(np.vdot(v, u)) > tol or abs(np.vdot(v, w)) > tol:
            raise NotHorizontalError("tangent vectors must be horizontal at p")
    return float(2.0 * np.imag(np.vdot(u, w)))


def grad_moment_norm_sq(rep: Representation, p) -> np.ndarray:
    """Gradient of ||mu||^2 for the real inner product Re(u^H w), horizontal at p."""
    v = as_point(p).vector
    mu = _kernels.moment_coeffs(rep.operator, v)
    mv = _kernels.weighted_apply(rep.operator, mu, v)
    return -4j * (mv - np.vdot(v, mv) * v)


# -- group actions --------------------------------------------------------------

def act(rep: Representation, x, p, t: float = 1.0) -> ProjectivePoint:
    """exp(t rho(X)) . p; use complex coefficients for the complexified action."""
    v = as_point(p).vector
    return ProjectivePoint(scipy.linalg.expm(t * rep.element(x)) @ v)


def adjoint_action(rep: Representation, x, y, t: float = 1.0) -> np.ndarray:
    """Ad(exp(t X)) Y on coefficient vectors."""
    return scipy.linalg.expm(t * rep.algebra.ad(x)) @ np.asarray(y)


# -- flow -------------------------------------------------------------------------------

@dataclass
class FlowResult:
    final_point: ProjectivePoint
    final_norm: float
    iterations: int
    converged: bool
    norm_history: list = field(default_factory=list)
    start_point: ProjectivePoint | None = None
    message: str = ""

    def summary(self) -> dict:
        return {
            "final_norm": self.final_norm,
            "final_norm_sq": self.final_norm ** 2,
            "iterations": self.iterations,
            "converged": self.converged,
            "message": self.message,
            "norm_history": list(self.norm_history),
        }


def random_open_start(rep: Representation, seed: int, attempts: int = 10) -> ProjectivePoint:
    """Seeded random point, redrawn while it fails the open-orbit test."""
    rng = np.random.default_rng(seed)
    p = random_point(rep.dim_v, rng)
    for _ in range(attempts - 1):
        if is_open_orbit(rep, p):
            break
        p = random_point(rep.dim_v, rng)
    return p


def kempf_ness_flow(rep: Representation, p0=None, *, max_iter: int = 20000, tol: float = 1e-9,
                    seed: int = 0, step: float = 1.0, armijo: float = 1e-4, shrink: float = 0.5,
                    min_step: float = 1e-14) -> FlowResult:
    """Gradient descent of ||mu||^2 on P(V) with Armijo backtracking.

    Retraction ``v <- normalize(v - eta * grad)``. ``norm_history`` records
    ``||mu||`` after every accepted step and is non-increasing. Converged means
    ``||mu|| < tol``; running out of iterations is reported, not raised.
    """
    p = random_open_start(rep, seed) if p0 is None else as_point(p0)
    start = p
    mats = rep.operator
    v = p.vector.copy()

    def f_and_grad(vec):
        mu = _kernels.moment_coeffs(mats, vec)
        mv = _kernels.weighted_apply(mats, mu, vec)
        g = -4j * (mv - np.vdot(vec, mv) * vec)
        return float(mu @ mu), g

    f, g = f_and_grad(v)
    history = [np.sqrt(f)]
    eta = step
    it = 0
    message = ""
    while np.sqrt(f) >= tol:
        if it >= max_iter:
            message = f"max_iter={max_iter} reached"
            break
        gg = float(np.vdot(g, g).real)
        if gg < 1e-28:
            message = "stationary point"
            break
        while True:
            cand = v - eta * g
            cand /= np.linalg.norm(cand)
            f_new, g_new = f_and_grad(cand)
            if f_new <= f - armijo * eta * gg:
                break
            eta *= shrink
            if eta < min_step:
                break
        if eta < min_step:
            message = "line search failed"
            break
        v, f, g = cand, f_new, g_new
        history.append(np.sqrt(f))
        it += 1
        eta = min(eta * 2.0, 1e3)
    final = ProjectivePoint(v)
    return FlowResult(final, float(np.sqrt(f)), it, bool(np.sqrt(f) < tol), history, start, message)


# -- isotropy ---------------------------------------------------------------------------

def _realify(m: np.ndarray) -> np.ndarray:
    return np.vstack([m.real, m.imag])


def numerical_rank(sv: np.ndarray, rtol: float = RANK_RTOL, gap: float = RANK_GAP) -> int:
    """Rank with threshold rtol * max(sv) and a mandatory spectral gap."""
    sv = np.sort(np.asarray(sv))[::-1]
    if len(sv) == 0 or sv[0] == 0:
        return 0
    keep = sv > rtol * sv[0]
    r = int(keep.sum())
    if r < len(sv) and sv[r] / sv[r - 1] >= gap:
        raise IllConditionedRankError(
            f"ill-conditioned rank: discarded {sv[r]:.3e} vs kept {sv[r - 1]:.3e}", sv)
    return r


def _null_space(mat: np.ndarray, n_cols: int):
    """Orthonormal null-space basis (columns) and rank, with the gap check."""
    if mat.size == 0:
        return np.eye(n_cols), 0
    _, s, vh = np.linalg.svd(mat, full_matrices=True)
    full = np.zeros(n_cols)
    full[:len(s)] = s
    r = numerical_rank(full)
    return vh[r:].conj().T, r


def isotropy_map(rep: Representation, p) -> np.ndarray:
    """Columns X_a -> rho(X_a) v - <rho(X_a) v, v> v, shape (D, d)."""
    v = as_point(p).vector
    cols = _kernels.action_columns(rep.operator, v)
    return cols - np.outer(v, v.conj() @ cols)


@dataclass(frozen=True, eq=False)
class IsotropySubalgebra:
    basis_matrices: np.ndarray
    coefficients: np.ndarray  # (d, k) coordinates in the algebra basis
    dim: int
    center_dim: int
    rank: int
    is_complexified: bool
    orbit_dim: int  # rank of the isotropy map (real or complex)
    singular_values: np.ndarray

    def triple(self) -> tuple:
        return (self.dim, self.rank, self.center_dim)


def _subalgebra_invariants(rep: Representation, coeffs: np.ndarray, seed: int = 0) -> tuple[int, int]:
    """(center_dim, rank) of the subalgebra spanned by the coefficient columns."""
    k = coeffs.shape[1]
    if k == 0:
        return 0, 0
    c = rep.algebra.structure_constants
    q, _ = np.linalg.qr(coeffs)
    # ad_i restricted: [n_i, n_j] expressed in the basis q
    ads = np.einsum("ai,bj,abk->ijk", q, q, c)  # (i, j, ambient)
    ads = np.einsum("ijk,kl->ilj", ads, q.conj())  # ad_i[l, j]
    killing = np.einsum("ilj,mjl->im", ads, ads)
    ev = np.linalg.svd(killing, compute_uv=False)
    scale = max(np.abs(ads).max(), 1e-300) ** 2
    center = k - (numerical_rank(ev) if ev.max() > 1e-10 * scale else 0)
    rng = np.random.default_rng(seed)
    x = rng.normal(size=k)
    if coeffs.dtype.kind == "c":
        x = x + 1j * rng.normal(size=k)
    adx = np.tensordot(x, ads, axes=1)
    sv = np.linalg.svd(adx, compute_uv=False)
    rank = k - (numerical_rank(sv) if sv.max() > 1e-10 * np.sqrt(scale) else 0)
    return center, rank


def real_isotropy(rep: Representation, p) -> IsotropySubalgebra:
    """Stabilizer subalgebra of [v] in the compact algebra."""
    m = isotropy_map(rep, p)
    d = rep.algebra.dim
    mr = _realify(m)
    _, s, vh = np.linalg.svd(mr, full_matrices=True)
    full = np.zeros(d)
    full[:len(s)] = s
    r = numerical_rank(full)
    coeffs = vh[r:].T
    center, rank = _subalgebra_invariants(rep, coeffs)
    mats = np.tensordot(coeffs.T, rep.matrices, axes=1) if coeffs.size else np.zeros((0,) + rep.matrices.shape[1:])
    return IsotropySubalgebra(mats, coeffs, d - r, center, rank, False, r, full)


def complex_isotropy(rep: Representation, p) -> IsotropySubalgebra:
    """Stabilizer subalgebra of [v] in the complexified algebra (complex dims)."""
    m = isotropy_map(rep, p)
    d = rep.algebra.dim
    coeffs, r = _null_space(m, d)
    center, rank = _subalgebra_invariants(rep, coeffs)
    mats = np.tensordot(coeffs.T, rep.matrices, axes=1) if coeffs.size else np.zeros((0,) + rep.matrices.shape[1:])
    sv = np.zeros(d)
    s = np.linalg.svd(m, compute_uv=False)
    sv[:len(s)] = s
    return IsotropySubalgebra(mats, coeffs, d - r, center, rank, True, r, sv)


@dataclass(frozen=True)
class OpenOrbitCheck:
    is_open: bool
    complex_orbit_dim: int
    proj_dim: int
    algebra_dim: int

    def __bool__(self):
        return self.is_open


def is_open_orbit(rep: Representation, p) -> OpenOrbitCheck:
    """dim_C g - dim_C g_p == dim_C P(V)."""
    m = isotropy_map(rep, p)
    _, r = _null_space(m, rep.algebra.dim)
    n = rep.dim_v - 1
    return OpenOrbitCheck(r == n, r, n, rep.algebra.dim)


@dataclass
class LagrangianCertificate:
    mu_norm: float
    orbit_dim: int
    proj_dim: int
    omega_residual: float
    open_orbit: bool
    passed: bool

    def to_dict(self) -> dict:
        return {"mu_norm": self.mu_norm, "orbit_dim": self.orbit_dim, "proj_dim": self.proj_dim,
                "omega_residual": self.omega_residual, "open_orbit": self.open_orbit, "pass": self.passed}


def tangent_frame(rep: Representation, p) -> np.ndarray:
    """Orthonormal (for Re<,>) frame of the real orbit tangent space, as columns."""
    m = isotropy_map(rep, p)
    mr = _realify(m)
    u, s, _ = np.linalg.svd(mr, full_matrices=False)
    full = np.zeros(rep.algebra.dim)
    full[:len(s)] = s
    r = numerical_rank(full)
    n = rep.dim_v
    return u[:n, :r] + 1j * u[n:, :r]


def verify_lagrangian(rep: Representation, p, tol: float = 1e-9) -> LagrangianCertificate:
    """Certify that the K-orbit through p is Lagrangian.

    Checks mu(p) = 0, real orbit dimension N = dim_C P(V), omega vanishing on
    the orbit tangent frame, and an open complexified orbit. The first two
    already imply the conclusion for semisimple K; the others are cross-checks.
    """
    p = as_point(p)
    mu = moment(rep, p).norm
    frame = tangent_frame(rep, p)
    orbit_dim = frame.shape[1]
    omega = 2.0 * np.imag(frame.conj().T @ frame)
    omega_res = float(np.abs(omega).max()) if orbit_dim else 0.0
    open_orbit = bool(is_open_orbit(rep, p))
    n = rep.dim_v - 1
    passed = mu < tol and orbit_dim == n and omega_res < tol and open_orbit
    return LagrangianCertificate(mu, orbit_dim, n, omega_res, open_orbit, bool(passed))


def check_minimal(rep: Representation, p, tol: float = 1e-9) -> bool:
    """Whether a Lagrangian orbit through p is minimal.

    The matrices are traceless, so this moment map is the canonical one, and
    on P(V) with the Fubini-Study metric a Lagrangian orbit is minimal exactly
    when the (constant) value of mu along it is zero.
    """
    return bool(moment(rep, p).norm < tol)
