"""Unitary representations of compact Lie algebras as stacks of matrices.

A :class:`Representation` carries one anti-Hermitian ``(D, D)`` matrix per
orthonormal basis element of its algebra. Constructors cover the defining
representations, symmetric and exterior powers, tensor products, duals,
weighted direct sums, spin representations in the fermionic Fock model,
the 7-dimensional representation of g2, and a plain-text loader for
externally supplied matrices.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations
from pathlib import Path
from typing import Sequence

import numpy as np

from . import _kernels
from .algebras import (
    LieAlgebraBasis,
    compact_algebra,
    orthonormalize,
    structure_constants,
)
from .roots import Weight


class RepresentationError(ValueError):
    pass


class NotIrreducibleError(RepresentationError):
    pass


@dataclass(frozen=True, eq=False)
class Representation:
    algebra: LieAlgebraBasis
    matrices: np.ndarray  # (d, D, D) complex
    label: str
    # isometry from this space into a tensor power of another rep (sym / wedge)
    tensor_embedding: np.ndarray | None = field(default=None, repr=False)
    # for direct sums: (offset, size, weight) per summand
    summands: tuple = ()
    # for spin representations: subset label of each basis vector
    fock_subsets: tuple = ()

    @property
    def dim_v(self) -> int:
        return self.matrices.shape[1]

    def __post_init__(self):
        m = np.ascontiguousarray(self.matrices, dtype=np.complex128)
        m.setflags(write=False)
        object.__setattr__(self, "matrices", m)
        if m.ndim != 3 or m.shape[0] != self.algebra.dim or m.shape[1] != m.shape[2]:
            raise RepresentationError(f"matrix stack of shape {m.shape} does not fit {self.algebra.name}")

    @cached_property
    def operator(self) -> _kernels.Operator:
        """Dense and sparse layouts of the matrix stack for the hot kernels."""
        return _kernels.Operator(self.matrices)

    def element(self, coeffs) -> np.ndarray:
        """rho(X) for X = sum coeffs[a] X_a."""
        return np.tensordot(np.asarray(coeffs), self.matrices, axes=1)

    # -- invariants ----------------------------------------------------------

    def anti_hermitian_residual(self) -> float:
        m = self.matrices
        herm = np.abs(m + np.conj(np.transpose(m, (0, 2, 1)))).max(axis=(1, 2))
        scale = np.maximum(np.abs(m).max(axis=(1, 2)), 1e-300)
        return float((herm / scale).max())

    def trace_residual(self) -> float:
        return float(np.abs(np.trace(self.matrices, axis1=1, axis2=2)).max())

    def homomorphism_residual(self) -> float:
        m, c = self.matrices, self.algebra.structure_constants
        worst = 0.0
        for i in range(len(m)):
            comm = m[i] @ m - m @ m[i]
            target = np.tensordot(c[i], m, axes=([1], [0]))
            worst = max(worst, float(np.abs(comm - target).max()))
        return worst

    def validate(self, tol_herm=1e-12, tol_hom=1e-9, tol_trace=1e-10) -> None:
        checks = [
            ("anti-Hermitian", self.anti_hermitian_residual(), tol_herm),
            ("homomorphism", self.homomorphism_residual(), tol_hom),
            ("traceless", self.trace_residual(), tol_trace),
        ]
        bad = [f"{name} residual {res:.3e} > {tol:.0e}" for name, res, tol in checks if not res < tol]
        if bad:
            raise RepresentationError(f"{self.label}: " + "; ".join(bad))

    # -- vectors -------------------------------------------------------------

    def from_tensor(self, tensor) -> np.ndarray:
        """Coordinates of a symmetric/antisymmetric tensor in this rep's basis."""
        if self.tensor_embedding is None:
            raise RepresentationError(f"{self.label} is not a tensor-power representation")
        t = np.asarray(tensor, dtype=complex).ravel()
        coords = self.tensor_embedding.conj().T @ t
        if not np.allclose(self.tensor_embedding @ coords, t, atol=1e-12):
            raise RepresentationError("tensor does not lie in the representation space")
        return coords

    def to_tensor(self, coords) -> np.ndarray:
        if self.tensor_embedding is None:
            raise RepresentationError(f"{self.label} is not a tensor-power representation")
        return self.tensor_embedding @ np.asarray(coords)

    def embed(self, parts: Sequence) -> np.ndarray:
        """Stack summand vectors, scaling summand i by sqrt(weight_i)."""
        if not self.summands:
            raise RepresentationError(f"{self.label} is not a direct sum")
        if len(parts) != len(self.summands):
            raise RepresentationError(f"expected {len(self.summands)} parts, got {len(parts)}")
        out = np.zeros(self.dim_v, dtype=complex)
        for (off, size, w), p in zip(self.summands, parts):
            p = np.asarray(p, dtype=complex)
            if p.shape != (size,):
                raise RepresentationError(f"part of shape {p.shape} does not fit summand of dim {size}")
            out[off:off + size] = math.sqrt(w) * p
        return out


def _basis_matrices(alg: LieAlgebraBasis) -> np.ndarray:
    if alg.basis_matrices is None:
        raise RepresentationError(f"{alg.name} has no matrix realization")
    return alg.basis_matrices


def defining_rep(alg: LieAlgebraBasis) -> Representation:
    if not alg.name.startswith(("su(", "so(", "sp(")):
        raise RepresentationError(f"{alg.name} is not a classical algebra")
    n = alg.basis_matrices.shape[1]
    return Representation(alg, _basis_matrices(alg), f"{alg.name} defining (dim {n})")


def g2_rep() -> Representation:
    alg = compact_algebra("g2")
    return Representation(alg, _basis_matrices(alg), "g2 7-dim")


# -- functorial constructions ------------------------------------------------

def _leibniz_on_tensors(mats: np.ndarray, cols: np.ndarray, n: int, k: int) -> np.ndarray:
    """Apply each X as a derivation of (C^n)^{(x)k} to the columns; (d, n^k, m)."""
    d, m = len(mats), cols.shape[1]
    t = cols.reshape((n,) * k + (m,))
    out = np.zeros((d,) + t.shape, dtype=complex)
    for j in range(k):
        # contract X (a, p, q) with axis j of t
        moved = np.moveaxis(np.tensordot(mats, t, axes=([2], [j])), 1, j + 1)
        out += moved
    return out.reshape(d, n ** k, m)


def _power(rep: Representation, k: int, kind: str) -> Representation:
    n = rep.dim_v
    if k < 1:
        raise RepresentationError("power must be >= 1")
    if kind == "wedge" and k > n:
        raise RepresentationError(f"wedge power {k} exceeds dimension {n}")
    cols = []
    if kind == "wedge":
        index_sets = list(combinations(range(n), k))
    else:
        index_sets = list(combinations_with_replacement(range(n), k))
    for idx in index_sets:
        t = np.zeros((n,) * k, dtype=complex)
        if kind == "wedge":
            for perm in permutations(range(k)):
                sign = _perm_sign(perm)
                t[tuple(idx[p] for p in perm)] += sign
        else:
            for arr in set(permutations(idx)):
                t[arr] = 1.0
        cols.append(t.ravel() / np.linalg.norm(t))
    emb = np.array(cols).T
    act = _leibniz_on_tensors(rep.matrices, emb, n, k)
    mats = np.einsum("ip,aiq->apq", emb.conj(), act)
    sym = "Λ" if kind == "wedge" else "S"
    return Representation(rep.algebra, mats, f"{sym}^{k}({rep.label})", tensor_embedding=emb)


def _perm_sign(perm) -> int:
    sign, seen = 1, list(perm)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    return sign


def sym_power(rep: Representation, k: int) -> Representation:
    return _power(rep, k, "sym")


def wedge_power(rep: Representation, k: int) -> Representation:
    return _power(rep, k, "wedge")


def tensor(rep1: Representation, rep2: Representation) -> Representation:
    if rep1.algebra is not rep2.algebra:
        raise RepresentationError("tensor product of representations of different algebras")
    i1, i2 = np.eye(rep1.dim_v), np.eye(rep2.dim_v)
    mats = np.array([np.kron(a, i2) + np.kron(i1, b) for a, b in zip(rep1.matrices, rep2.matrices)])
    return Representation(rep1.algebra, mats, f"{rep1.label} ⊗ {rep2.label}")


def dual_rep(rep: Representation) -> Representation:
    mats = -np.transpose(rep.matrices, (0, 2, 1))
    label = rep.label[:-1] if rep.label.endswith("*") else rep.label + "*"
    return Representation(rep.algebra, mats, label)


def direct_sum(reps: Sequence[Representation], weights: Sequence[float] | None = None) -> Representation:
    """Block-diagonal sum; ``weights`` scale the Hermitian form on each summand.

    The matrices do not depend on the weights; they only enter through
    :meth:`Representation.embed`, which maps literal vectors to coordinates.
    """
    reps = list(reps)
    if not reps:
        raise RepresentationError("empty direct sum")
    weights = [1.0] * len(reps) if weights is None else [float(w) for w in weights]
    if len(weights) != len(reps) or any(w <= 0 for w in weights):
        raise RepresentationError("weights must be positive, one per summand")
    alg = reps[0].algebra
    if any(r.algebra is not alg for r in reps):
        raise RepresentationError("direct sum of representations of different algebras")
    total = sum(r.dim_v for r in reps)
    mats = np.zeros((alg.dim, total, total), dtype=complex)
    summands, off = [], 0
    for r, w in zip(reps, weights):
        mats[:, off:off + r.dim_v, off:off + r.dim_v] = r.matrices
        summands.append((off, r.dim_v, w))
        off += r.dim_v
    label = " ⊕ ".join(r.label for r in reps)
    return Representation(alg, mats, label, summands=tuple(summands))


def subrepresentation(rep: Representation, basis: np.ndarray, label: str | None = None) -> Representation:
    """Restrict to an invariant subspace with orthonormal basis columns."""
    q = np.asarray(basis, dtype=complex)
    mats = np.einsum("ip,aij,jq->apq", q.conj(), rep.matrices, q)
    leak = max(np.abs(m @ q - q @ mq).max() for m, mq in zip(rep.matrices, mats))
    if leak > 1e-9:
        raise RepresentationError(f"subspace is not invariant (residual {leak:.2e})")
    return Representation(rep.algebra, mats, label or f"sub({rep.label}, {q.shape[1]})")


def casimir(rep: Representation) -> np.ndarray:
    """-sum_a rho(X_a)^2 (Hermitian, positive semidefinite)."""
    return -np.einsum("aij,ajk->ik", rep.matrices, rep.matrices)


def isotypic_components(rep: Representation, tol=1e-8) -> list[tuple[float, np.ndarray]]:
    """Eigenspaces of the Casimir operator, as (eigenvalue, orthonormal basis)."""
    vals, vecs = np.linalg.eigh(casimir(rep))
    groups, start = [], 0
    for i in range(1, len(vals) + 1):
        if i == len(vals) or vals[i] - vals[start] > tol * max(1.0, abs(vals[-1])):
            groups.append((float(vals[start:i].mean()), vecs[:, start:i]))
            start = i
    return groups


# -- spin representations -----------------------------------------------------

def fock_operators(m: int) -> tuple[list[np.ndarray], np.ndarray, list[frozenset]]:
    """Annihilation operators a_1..a_m on the 2^m-dim Fock space.

    Basis vector ``e_S`` for ``S`` a subset of {1..m}; creation of ``k`` on
    ``e_S`` carries the sign ``(-1)^#{j in S : j < k}``. Returns the
    annihilators, the parity operator and the ordered list of subsets.
    """
    subsets = [frozenset(s) for r in range(m + 1) for s in combinations(range(1, m + 1), r)]
    subsets.sort(key=lambda s: (len(s) % 2, len(s), sorted(s)))
    index = {s: i for i, s in enumerate(subsets)}
    dim = len(subsets)
    ann = []
    for k in range(1, m + 1):
        a = np.zeros((dim, dim))
        for s in subsets:
            if k in s:
                sign = (-1) ** sum(1 for j in s if j < k)
                a[index[s - {k}], index[s]] = sign
        ann.append(a)
    parity = np.diag([(-1.0) ** len(s) for s in subsets])
    return ann, parity, subsets


def gamma_matrices(n: int) -> tuple[list[np.ndarray], list[frozenset]]:
    """Hermitian gamma_1..gamma_n with gamma_a gamma_b + gamma_b gamma_a = 2 delta_ab."""
    m = n // 2
    ann, parity, subsets = fock_operators(m)
    gammas = []
    for a in ann:
        cre = a.T
        gammas.append((a + cre).astype(complex))
        gammas.append(1j * (cre - a))
    if n % 2:
        gammas.append(parity.astype(complex))
    return gammas, subsets


def spin_rep(n: int, chirality: str = "full") -> Representation:
    """Spin representation of so(n) in the Fock model with floor(n/2) modes.

    ``E_ab - E_ba`` acts as ``gamma_a gamma_b / 2``. For even ``n``, choose the
    ``even`` or ``odd`` half-spin summand (subsets of even / odd cardinality);
    ``full`` is allowed only for odd ``n``.
    """
    if n < 3:
        raise RepresentationError("spin representations need n >= 3")
    if n % 2 and chirality != "full":
        raise RepresentationError(f"so({n}) has no chiral halves; use chirality='full'")
    if n % 2 == 0 and chirality not in ("even", "odd"):
        raise RepresentationError(f"so({n}) spin representation must be 'even' or 'odd'")
    alg = compact_algebra("so", n)
    gammas, subsets = gamma_matrices(n)
    # so(n) basis elements are rotations E_ab - E_ba up to scale: read off (a, b)
    mats = []
    for x in alg.basis_matrices:
        acc = np.zeros_like(gammas[0])
        for a, b in combinations(range(n), 2):
            c = x[a, b].real
            if c != 0.0:
                acc = acc + c * 0.5 * gammas[a] @ gammas[b]
        mats.append(acc)
    mats = np.array(mats)
    keep = list(range(len(subsets)))
    if chirality in ("even", "odd"):
        want = 0 if chirality == "even" else 1
        keep = [i for i, s in enumerate(subsets) if len(s) % 2 == want]
    mats = mats[:, keep][:, :, keep]
    return Representation(alg, mats, f"spin({n}) {chirality}",
                          fock_subsets=tuple(subsets[i] for i in keep))


def fock_vector(rep: Representation, terms: dict) -> np.ndarray:
    """Vector in a spin representation from {subset: coefficient}."""
    subsets = rep.fock_subsets
    if not subsets:
        raise RepresentationError(f"{rep.label} has no Fock labels")
    index = {s: i for i, s in enumerate(subsets)}
    v = np.zeros(len(subsets), dtype=complex)
    for s, c in terms.items():
        key = frozenset(s)
        if key not in index:
            raise RepresentationError(f"subset {sorted(key)} not in {rep.label}")
        v[index[key]] += c
    return v


# -- real structures -----------------------------------------------------------

def real_structure(rep: Representation, tol=1e-9) -> np.ndarray | None:
    """Unitary C with rho(X) C = C conj(rho(X)) and C conj(C) = I, or None.

    None means the representation has no invariant real form (complex or
    quaternionic type, or reducible with a higher-dimensional space of
    intertwiners).
    """
    n = rep.dim_v
    eye = np.eye(n)
    # row-major vec: vec(A C) = (A kron I) vec C, vec(C B) = (I kron B^T) vec C
    blocks = [np.kron(m, eye) - np.kron(eye, np.conj(m).T) for m in rep.matrices]
    # thin SVD; null_space would build the full left factor
    _, sv, vh = np.linalg.svd(np.vstack(blocks), full_matrices=False)
    null = vh[sv <= tol * max(sv[0], 1.0)]
    if null.shape[0] != 1:
        return None
    c = null[0].conj().reshape(n, n)
    c = c / np.sqrt(np.abs(np.linalg.det(c)) ** (2.0 / n))
    sq = c @ np.conj(c)
    lam = np.trace(sq) / n
    if not np.allclose(sq, lam * eye, atol=1e-8) or lam.real <= 0:
        return None
    c = c / np.sqrt(lam.real)
    # fix the overall phase freedom c -> e^{it} c is irrelevant for fixed points
    return c


def real_basis(rep: Representation) -> np.ndarray:
    """Orthonormal basis (columns) of the real form; the matrices become real there."""
    c = real_structure(rep)
    if c is None:
        raise RepresentationError(f"{rep.label} is not of real type")
    n = rep.dim_v
    cands = []
    for k in range(n):
        e = np.zeros(n, dtype=complex)
        e[k] = 1
        for z in (e, 1j * e):
            cands.append(z + c @ np.conj(z))
    # the candidates span an n-dim real subspace of R^{2n}; real vectors of an
    # antiunitary involution are orthogonal over C once they are over R
    stacked = np.array([np.concatenate([x.real, x.imag]) for x in cands]).T
    u, sv, _ = np.linalg.svd(stacked)
    if sv[n - 1] < 1e-8 * sv[0] or (len(sv) > n and sv[n] > 1e-8 * sv[0]):
        raise RepresentationError("could not extract a full real basis")
    basis = u[:n, :n] + 1j * u[n:, :n]
    return basis / np.linalg.norm(basis, axis=0)


# -- weights -----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class WeightDecomposition:
    entries: tuple  # ((Weight, basis (D, m)), ...)

    @property
    def total_multiplicity(self) -> int:
        return sum(b.shape[1] for _, b in self.entries)

    def weights(self) -> list[Weight]:
        return [w for w, _ in self.entries]

    def space(self, weight: Weight) -> np.ndarray:
        for w, b in self.entries:
            if w.epsilon_coords == weight.epsilon_coords:
                return b
        raise KeyError(str(weight))


def _rationalize(x: float, max_den=12, tol=1e-8) -> Fraction:
    f = Fraction(x).limit_denominator(max_den)
    if abs(float(f) - x) > tol:
        raise RepresentationError(f"weight coordinate {x!r} is not a small rational")
    return f


def weight_decomposition(rep: Representation, tol=1e-9, seed=0) -> WeightDecomposition:
    alg = rep.algebra
    if alg.cartan_vectors is None or not alg.cartan_indices:
        raise RepresentationError(f"{alg.name} has no Cartan data")
    rs = alg.root_system()
    hs = [rep.matrices[i] for i in alg.cartan_indices]
    for i in range(len(hs)):
        for j in range(i):
            if np.abs(hs[i] @ hs[j] - hs[j] @ hs[i]).max() > tol:
                raise RepresentationError("Cartan matrices do not commute")
    coeffs = np.random.default_rng(seed).normal(size=len(hs))
    generic = sum(c * (-1j) * h for c, h in zip(coeffs, hs))
    vals, vecs = np.linalg.eigh((generic + generic.conj().T) / 2)
    # eigenvalues of each H_k on each eigenvector
    ev = np.array([np.real(np.einsum("ia,ij,ja->a", vecs.conj(), -1j * h, vecs)) for h in hs]).T
    for h, col in zip(hs, ev.T):
        if np.abs(h @ vecs - 1j * vecs * col).max() > 1e-8:
            raise RepresentationError("Cartan matrices are not simultaneously diagonalized")
    # epsilon coordinates w with <w, h_k> = eigenvalue_k
    cv = alg.cartan_vectors
    eps = np.linalg.lstsq(cv, ev.T, rcond=None)[0].T
    groups: dict = {}
    for i, w in enumerate(eps):
        key = tuple(_rationalize(x) for x in w)
        groups.setdefault(key, []).append(i)
    entries = []
    for key, idx in groups.items():
        entries.append((rs.weight(key), vecs[:, idx]))
    entries.sort(key=lambda e: tuple(-x for x in e[0].epsilon_coords))
    return WeightDecomposition(tuple(entries))


def canonical_phase(v: np.ndarray, eps=1e-10) -> np.ndarray:
    """Rotate the phase so the first coordinate of modulus > eps is real positive."""
    v = np.asarray(v, dtype=complex)
    nz = np.flatnonzero(np.abs(v) > eps)
    if len(nz) == 0:
        return v
    first = v[nz[0]]
    return v * (abs(first) / first)


def extreme_weight_vector(rep: Representation, sign: int = 1, decomposition=None) -> tuple[Weight, np.ndarray]:
    """Unit vector of the highest (sign=1) or lowest (sign=-1) weight."""
    wd = decomposition or weight_decomposition(rep)
    rs = rep.algebra.root_system()
    heights = [sign * float(sum(x * y for x, y in zip(w.epsilon_coords, rs.rho))) for w, _ in wd.entries]
    top = max(heights)
    winners = [i for i, h in enumerate(heights) if abs(h - top) < 1e-12]
    if len(winners) != 1:
        raise NotIrreducibleError(f"{rep.label}: no unique extreme weight")
    w, basis = wd.entries[winners[0]]
    if basis.shape[1] != 1:
        raise NotIrreducibleError(f"{rep.label}: extreme weight {w} has multiplicity {basis.shape[1]}")
    return w, canonical_phase(basis[:, 0])


def highest_weight_vector(rep: Representation) -> np.ndarray:
    return extreme_weight_vector(rep, 1)[1]


# -- structure-constant file loader -------------------------------------------------

def load_structure_file(path, name: str | None = None) -> Representation:
    """Load ``rho(X_a)`` from the plain-text matrix format and validate it.

    Format: line 1 ``dim_algebra dim_rep``; then ``a row col re im`` per
    nonzero entry (0-based indices); ``#`` starts a comment. The given
    matrices are orthonormalized under ``-tr(XY)`` before use.
    """
    path = Path(path)
    header = None
    entries = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise RepresentationError(f"{path}:{lineno}: header must be 'dim_algebra dim_rep'")
            header = (int(parts[0]), int(parts[1]))
            continue
        if len(parts) != 5:
            raise RepresentationError(f"{path}:{lineno}: expected 'a row col re im'")
        a, i, j = (int(p) for p in parts[:3])
        entries.append((a, i, j, complex(float(parts[3]), float(parts[4]))))
    if header is None:
        raise RepresentationError(f"{path}: empty file")
    d, n = header
    mats = np.zeros((d, n, n), dtype=complex)
    for a, i, j, z in entries:
        if not (0 <= a < d and 0 <= i < n and 0 <= j < n):
            raise RepresentationError(f"{path}: entry ({a}, {i}, {j}) out of range")
        mats[a, i, j] += z
    herm = np.abs(mats + np.conj(np.transpose(mats, (0, 2, 1)))).max()
    if herm > 1e-10:
        raise RepresentationError(f"{path}: matrices are not anti-Hermitian (residual {herm:.2e})")
    basis = orthonormalize(list(mats))
    if len(basis) != d:
        raise RepresentationError(f"{path}: matrices are linearly dependent ({len(basis)} of {d})")
    basis = np.array(basis)
    label = name or path.stem
    alg = LieAlgebraBasis(
        name=label,
        dim=d,
        structure_constants=structure_constants(basis),
        cartan_indices=(),
        inner_product=np.eye(d),
        basis_matrices=basis,
    )
    rep = Representation(alg, basis, f"{label} (loaded, dim {n})")
    rep.validate(tol_herm=1e-10)
    return rep


def write_structure_file(rep: Representation, path, comment: str = "") -> None:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{rep.algebra.dim} {rep.dim_v}")
    for a, m in enumerate(rep.matrices):
        for i, j in zip(*np.nonzero(np.abs(m) > 0)):
            z = m[i, j]
            lines.append(f"{a} {i} {j} {z.real:.17g} {z.imag:.17g}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
