"""Hot kernels for the moment map and its gradient.

Two implementations of every kernel: a numba ``@njit`` one and a plain numpy
one. The numba path is used when numba imports and ``LAGORB_DISABLE_NUMBA``
is unset (or ``0``). Both are importable as ``numpy_*`` and ``numba_*`` so
they can be benchmarked and cross-checked.

Representation matrices are sparse (a few percent nonzero), so the numba
kernels walk a COO list ``(ia, ii, ij, vals)`` meaning
``mats[ia[t], ii[t], ij[t]] = vals[t]``; the numpy kernels use the dense
``(d, D, D)`` stack. :class:`Operator` carries both layouts.
"""
import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None


def _flag_disabled() -> bool:
    return os.environ.get("LAGORB_DISABLE_NUMBA", "0").strip().lower() not in ("", "0", "false", "no")


HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and not _flag_disabled()


def numpy_action_columns(mats, v):
    """Column a is mats[a] @ v; returns (D, d)."""
    return np.einsum("aij,j->ia", mats, v, optimize=True)


def numpy_moment_coeffs(mats, v):
    """Im(v^H mats[a] v) for every a (the moment map at unit v)."""
    return np.imag(v.conj() @ numpy_action_columns(mats, v))


def numpy_weighted_apply(mats, coeffs, v):
    """(sum_a coeffs[a] mats[a]) @ v."""
    return np.einsum("a,aij,j->i", coeffs, mats, v, optimize=True)


def _coo_moment_coeffs(ia, ii, ij, vals, d, v):
    out = np.zeros(d)
    for t in range(vals.shape[0]):
        z = v[ii[t]].conjugate() * vals[t] * v[ij[t]]
        out[ia[t]] += z.imag
    return out


def _coo_weighted_apply(ia, ii, ij, vals, coeffs, v):
    out = np.zeros(v.shape[0], dtype=np.complex128)
    for t in range(vals.shape[0]):
        out[ii[t]] += coeffs[ia[t]] * vals[t] * v[ij[t]]
    return out


def _coo_action_columns(ia, ii, ij, vals, d, v):
    out = np.zeros((v.shape[0], d), dtype=np.complex128)
    for t in range(vals.shape[0]):
        out[ii[t], ia[t]] += vals[t] * v[ij[t]]
    return out


if HAVE_NUMBA:
    _jit = numba.njit(cache=True, nogil=True)
    numba_moment_coeffs = _jit(_coo_moment_coeffs)
    numba_weighted_apply = _jit(_coo_weighted_apply)
    numba_action_columns = _jit(_coo_action_columns)
else:  # pragma: no cover
    numba_moment_coeffs = _coo_moment_coeffs
    numba_weighted_apply = _coo_weighted_apply
    numba_action_columns = _coo_action_columns


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


class Operator:
    """Stack of representation matrices in dense and COO form."""

    def __init__(self, mats):
        self.mats = np.ascontiguousarray(mats, dtype=np.complex128)
        self.d = self.mats.shape[0]
        ia, ii, ij = np.nonzero(self.mats)
        self.ia, self.ii, self.ij = (x.astype(np.int64) for x in (ia, ii, ij))
        self.vals = np.ascontiguousarray(self.mats[ia, ii, ij])

    @property
    def density(self) -> float:
        return self.vals.size / max(self.mats.size, 1)

    @property
    def coo(self):
        return self.ia, self.ii, self.ij, self.vals


def as_operator(ops) -> Operator:
    return ops if isinstance(ops, Operator) else Operator(ops)


def moment_coeffs(ops, v):
    """Im(v^H rho(X_a) v) for every a; ``ops`` is an Operator or a dense stack."""
    op = as_operator(ops)
    v = np.ascontiguousarray(v, dtype=np.complex128)
    if USE_NUMBA:
        return numba_moment_coeffs(*op.coo, op.d, v)
    return numpy_moment_coeffs(op.mats, v)


def weighted_apply(ops, coeffs, v):
    """(sum_a coeffs[a] rho(X_a)) v."""
    op = as_operator(ops)
    v = np.ascontiguousarray(v, dtype=np.complex128)
    coeffs = np.ascontiguousarray(coeffs, dtype=np.float64)
    if USE_NUMBA:
        return numba_weighted_apply(*op.coo, coeffs, v)
    return numpy_weighted_apply(op.mats, coeffs, v)


def action_columns(ops, v):
    """Columns rho(X_a) v, shape (D, d)."""
    op = as_operator(ops)
    v = np.ascontiguousarray(v, dtype=np.complex128)
    if USE_NUMBA:
        return numba_action_columns(*op.coo, op.d, v)
    return numpy_action_columns(op.mats, v)
