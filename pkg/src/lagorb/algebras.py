"""Compact simple Lie algebras as orthonormal bases of anti-Hermitian matrices.

Every basis is orthonormal for ``<X, Y> = -tr(X Y)`` taken in the matrices
the algebra is built from (the defining representation for the classical
families, the 7-dimensional one for g2). The first ``rank`` elements span a
maximal torus; ``cartan_vectors[k]`` is the epsilon-coordinate vector ``h``
with ``rho(H_k) v = i <w, h> v`` on a vector ``v`` of weight ``w``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np
import scipy.linalg

from .roots import RootSystem, UnsupportedTypeError, build_root_system


class AlgebraUnavailableError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class LieAlgebraBasis:
    name: str
    dim: int
    structure_constants: np.ndarray  # c[i, j, k]: [X_i, X_j] = sum_k c[i, j, k] X_k
    cartan_indices: tuple
    inner_product: np.ndarray
    cartan_vectors: np.ndarray | None = None
    root_type: tuple | None = None  # (family, rank) for build_root_system
    basis_matrices: np.ndarray | None = field(default=None, repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan_indices)

    def root_system(self) -> RootSystem:
        if self.root_type is None:
            raise AlgebraUnavailableError(f"{self.name}: no root-system data attached")
        return build_root_system(*self.root_type)

    def ad(self, coeffs) -> np.ndarray:
        """Matrix of ad_X on coefficient vectors, X = sum coeffs[i] X_i."""
        return np.einsum("i,ijk->kj", np.asarray(coeffs, dtype=float), self.structure_constants)

    def bracket(self, x, y) -> np.ndarray:
        return np.einsum("i,j,ijk->k", x, y, self.structure_constants)

    def jacobi_residual(self) -> float:
        c = self.structure_constants
        # sum over cyclic (i,j,k) of [[X_i,X_j],X_k]
        t = np.einsum("ijm,mkn->ijkn", c, c)
        res = t + np.transpose(t, (1, 2, 0, 3)) + np.transpose(t, (2, 0, 1, 3))
        return float(np.abs(res).max())

    def antisymmetry_residual(self) -> float:
        c = self.structure_constants
        return float(np.abs(c + np.transpose(c, (1, 0, 2))).max())

    def invariance_residual(self) -> float:
        """max |<[X,Y],Z> + <Y,[X,Z]>| over basis triples."""
        c, g = self.structure_constants, self.inner_product
        t = np.einsum("ijm,mk->ijk", c, g)  # <[X_i,X_j], X_k>
        return float(np.abs(t + np.transpose(np.einsum("ikm,mj->ijk", c, g), (0, 1, 2))).max())


def _ip(x, y) -> float:
    return float(-np.trace(x @ y).real)


def orthonormalize(mats, tol=1e-10):
    """Gram-Schmidt under -tr(XY); drops dependent elements."""
    out = []
    for m in mats:
        m = np.array(m, dtype=complex)
        for b in out:
            m = m - _ip(m, b) * b
        nrm = np.sqrt(max(_ip(m, m), 0.0))
        if nrm > tol:
            out.append(m / nrm)
    return out


def structure_constants(mats) -> np.ndarray:
    mats = np.asarray(mats)
    d = len(mats)
    c = np.zeros((d, d, d))
    for i in range(d):
        comm = mats[i] @ mats - mats @ mats[i]
        # orthonormal basis: c[i, j, k] = -tr([X_i, X_j] X_k)
        c[i] = -np.einsum("jab,kba->jk", comm, mats).real
    return c


def _su_basis(n):
    cart, hvecs = [], []
    for k in range(1, n):
        h = np.zeros(n)
        h[:k] = 1.0
        h[k] = -k
        h /= np.sqrt(k * (k + 1))
        cart.append(1j * np.diag(h))
        hvecs.append(h)
    rest = []
    for a, b in combinations(range(n), 2):
        x = np.zeros((n, n), dtype=complex)
        x[a, b], x[b, a] = 1, -1
        rest.append(x / np.sqrt(2))
        y = np.zeros((n, n), dtype=complex)
        y[a, b] = y[b, a] = 1j
        rest.append(y / np.sqrt(2))
    return cart, np.array(hvecs), rest


def rotation(n, a, b):
    """E_ab - E_ba as a complex n x n matrix."""
    m = np.zeros((n, n), dtype=complex)
    m[a, b], m[b, a] = 1, -1
    return m


def _so_basis(n):
    m = n // 2
    cart = [rotation(n, 2 * k, 2 * k + 1) / np.sqrt(2) for k in range(m)]
    hvecs = np.eye(m) / np.sqrt(2)
    cart_pairs = {(2 * k, 2 * k + 1) for k in range(m)}
    rest = [rotation(n, a, b) / np.sqrt(2) for a, b in combinations(range(n), 2) if (a, b) not in cart_pairs]
    return cart, hvecs, rest


def symplectic_form(n):
    return np.block([[np.zeros((n, n)), np.eye(n)], [-np.eye(n), np.zeros((n, n))]])


def _sp_basis(n):
    # X = [[A, B], [-conj(B), conj(A)]], A in u(n), B complex symmetric
    def block(a, b):
        return np.block([[a, b], [-b.conj(), a.conj()]])

    z = np.zeros((n, n), dtype=complex)
    cart, hvecs = [], []
    for k in range(n):
        a = z.copy()
        a[k, k] = 1j
        cart.append(block(a, z))
        hvecs.append(np.eye(n)[k])
    rest = []
    for j, k in combinations(range(n), 2):
        a = z.copy()
        a[j, k], a[k, j] = 1, -1
        rest.append(block(a, z))
        a = z.copy()
        a[j, k] = a[k, j] = 1j
        rest.append(block(a, z))
    for j in range(n):
        for k in range(j, n):
            for ph in (1, 1j):
                b = z.copy()
                b[j, k] = b[k, j] = ph
                rest.append(block(z, b))
    norms = [np.sqrt(_ip(x, x)) for x in cart]
    cart = [x / s for x, s in zip(cart, norms)]
    hvecs = np.array([h / s for h, s in zip(hvecs, norms)])
    rest = [x / np.sqrt(_ip(x, x)) for x in rest]
    return cart, hvecs, rest


# associative 3-form on R^7, 0-based: e012 + e034 + e056 + e135 - e146 - e236 - e245
G2_FORM_TERMS = ((0, 1, 2, 1), (0, 3, 4, 1), (0, 5, 6, 1), (1, 3, 5, 1),
                 (1, 4, 6, -1), (2, 3, 6, -1), (2, 4, 5, -1))


def g2_three_form() -> np.ndarray:
    phi = np.zeros((7, 7, 7))
    for a, b, c, s in G2_FORM_TERMS:
        for (i, j, k), sgn in (((a, b, c), 1), ((b, c, a), 1), ((c, a, b), 1),
                               ((b, a, c), -1), ((a, c, b), -1), ((c, b, a), -1)):
            phi[i, j, k] = s * sgn
    return phi


def act_on_three_form(x, phi):
    """Derivation action of a 7x7 matrix on a 3-tensor."""
    return (np.einsum("ia,ajk->ijk", x, phi) + np.einsum("ja,iak->ijk", x, phi)
            + np.einsum("ka,ija->ijk", x, phi))


def _g2_basis():
    phi = g2_three_form()
    so7 = [rotation(7, a, b).real for a, b in combinations(range(7), 2)]
    lin = np.array([act_on_three_form(x, phi).ravel() for x in so7]).T
    null = scipy.linalg.null_space(lin, rcond=1e-10)
    assert null.shape[1] == 14
    g2 = [np.tensordot(null[:, i], np.array(so7), axes=1) for i in range(14)]
    # maximal torus inside the rotations of the planes (1,2), (3,4), (5,6)
    planes = [rotation(7, 1, 2).real, rotation(7, 3, 4).real, rotation(7, 5, 6).real]
    lin_t = np.array([act_on_three_form(x, phi).ravel() for x in planes]).T
    tnull = scipy.linalg.null_space(lin_t, rcond=1e-10)
    assert tnull.shape[1] == 2
    # orient the plane coordinates so the torus is the sum-zero plane
    signs = np.sign(scipy.linalg.null_space(tnull.T)[:, 0])
    cart, hvecs = [], []
    for i in range(2):
        coeffs = tnull[:, i]
        cart.append(np.tensordot(coeffs, np.array(planes), axes=1).astype(complex))
        hvecs.append(coeffs * signs)
    norms = [np.sqrt(_ip(x, x)) for x in cart]
    cart = [x / s for x, s in zip(cart, norms)]
    hvecs = np.array([h / s for h, s in zip(hvecs, norms)])
    # rotate to a deterministic orthonormal torus basis before completing
    basis = orthonormalize(cart + [x.astype(complex) for x in g2])
    return cart, hvecs, basis[2:]


def _assemble(name, cart, hvecs, rest, root_type):
    mats = np.array(list(cart) + list(rest))
    r = len(cart)
    if len(orthonormalize(mats)) != len(mats):
        raise AssertionError(f"{name}: basis not independent")
    return LieAlgebraBasis(
        name=name,
        dim=len(mats),
        structure_constants=structure_constants(mats),
        cartan_indices=tuple(range(r)),
        inner_product=np.eye(len(mats)),
        cartan_vectors=np.asarray(hvecs, dtype=float),
        root_type=root_type,
        basis_matrices=mats,
    )


def _normalize_family(family) -> str:
    f = str(family).lower()
    aliases = {"a": "su", "su": "su", "so": "so", "sp": "sp", "c": "sp", "g2": "g2", "g": "g2",
               "e6": "e6", "e7": "e7"}
    if f not in aliases:
        raise UnsupportedTypeError(f"unsupported algebra family {family!r}")
    return aliases[f]


@lru_cache(maxsize=None)
def compact_algebra(family: str, n: int | None = None) -> LieAlgebraBasis:
    """``compact_algebra("su", 3)``, ``("so", 7)``, ``("sp", 3)``, ``("g2")``.

    ``n`` is the matrix parameter (su(n), so(n), sp(n)), not the rank.
    """
    f = _normalize_family(family)
    if f == "su":
        if n is None or n < 2:
            raise UnsupportedTypeError(f"su({n}) is not simple")
        cart, h, rest = _su_basis(n)
        return _assemble(f"su({n})", cart, h, rest, ("A", n - 1))
    if f == "so":
        if n is None or n < 3:
            raise UnsupportedTypeError(f"so({n}) is not supported")
        cart, h, rest = _so_basis(n)
        root_type = ("B", n // 2) if n % 2 else ("D", n // 2)
        return _assemble(f"so({n})", cart, h, rest, root_type)
    if f == "sp":
        if n is None or n < 1:
            raise UnsupportedTypeError(f"sp({n}) is not supported")
        cart, h, rest = _sp_basis(n)
        return _assemble(f"sp({n})", cart, h, rest, ("C", n))
    if f == "g2":
        cart, h, rest = _g2_basis()
        return _assemble("g2", cart, h, rest, ("G2", 2))
    if f == "e6":
        raise AlgebraUnavailableError("e6 matrices are not constructible without data; load a structure-constant file")
    raise AlgebraUnavailableError("e7 matrices are not constructible without data")
