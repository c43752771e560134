import numpy as np
import pytest

from lagorb.algebras import (
    AlgebraUnavailableError,
    act_on_three_form,
    compact_algebra,
    g2_three_form,
    symplectic_form,
)
from lagorb.roots import UnsupportedTypeError

CASES = [("su", 2, 3), ("su", 4, 15), ("so", 5, 10), ("so", 8, 28), ("sp", 2, 10), ("sp", 3, 21), ("g2", None, 14)]


@pytest.mark.parametrize("family,n,dim", CASES)
def test_dimension_and_rank(family, n, dim):
    alg = compact_algebra(family, n)
    assert alg.dim == dim
    assert alg.rank == alg.root_system().rank


@pytest.mark.parametrize("family,n,dim", CASES)
def test_basis_is_orthonormal_for_minus_trace(family, n, dim):
    m = compact_algebra(family, n).basis_matrices
    gram = -np.einsum("aij,bji->ab", m, m).real
    assert np.allclose(gram, np.eye(dim), atol=1e-12)


@pytest.mark.parametrize("family,n,dim", CASES)
def test_structure_constant_identities(family, n, dim):
    alg = compact_algebra(family, n)
    assert alg.antisymmetry_residual() < 1e-12
    assert alg.jacobi_residual() < 1e-12
    assert alg.invariance_residual() < 1e-12


@pytest.mark.parametrize("family,n,dim", CASES)
def test_brackets_match_matrices(family, n, dim):
    alg = compact_algebra(family, n)
    m = alg.basis_matrices
    rng = np.random.default_rng(1)
    x, y = rng.normal(size=dim), rng.normal(size=dim)
    mx, my = np.tensordot(x, m, 1), np.tensordot(y, m, 1)
    assert np.allclose(np.tensordot(alg.bracket(x, y), m, 1), mx @ my - my @ mx, atol=1e-12)


@pytest.mark.parametrize("family,n,dim", CASES)
def test_cartan_elements_commute_and_act_by_weights(family, n, dim):
    alg = compact_algebra(family, n)
    m = alg.basis_matrices[list(alg.cartan_indices)]
    for a in m:
        for b in m:
            assert np.allclose(a @ b, b @ a, atol=1e-13)
    # each Cartan element is i * (weight . h) on its eigenvectors; eigenvalues are imaginary
    assert np.allclose(np.linalg.eigvals(m[0]).real, 0, atol=1e-12)


def test_sp_preserves_symplectic_form():
    j = symplectic_form(3)
    for x in compact_algebra("sp", 3).basis_matrices:
        assert np.abs(x.T @ j + j @ x).max() < 1e-14


def test_g2_annihilates_three_form():
    phi = g2_three_form()
    for x in compact_algebra("g2").basis_matrices:
        assert np.abs(act_on_three_form(x.real, phi)).max() < 1e-12
        assert np.abs(x.imag).max() == 0


def test_ad_is_antisymmetric_in_orthonormal_basis():
    alg = compact_algebra("su", 3)
    ad = alg.ad(np.random.default_rng(0).normal(size=8))
    assert np.allclose(ad, -ad.T, atol=1e-13)


@pytest.mark.parametrize("family", ["e6", "e7"])
def test_exceptional_matrices_unavailable(family):
    with pytest.raises(AlgebraUnavailableError):
        compact_algebra(family)


@pytest.mark.parametrize("family,n", [("su", 1), ("so", 2), ("sp", 0), ("f4", None)])
def test_unsupported(family, n):
    with pytest.raises(UnsupportedTypeError):
        compact_algebra(family, n)
