from fractions import Fraction
from itertools import permutations, product
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lagorb.algebras import compact_algebra
from lagorb.representations import (
    RepresentationError,
    casimir,
    defining_rep,
    direct_sum,
    dual_rep,
    extreme_weight_vector,
    fock_vector,
    g2_rep,
    gamma_matrices,
    highest_weight_vector,
    isotypic_components,
    load_structure_file,
    real_basis,
    real_structure,
    spin_rep,
    sym_power,
    tensor,
    wedge_power,
    weight_decomposition,
    write_structure_file,
)

H = Fraction(1, 2)


def su(n):
    return defining_rep(compact_algebra("su", n))


REPS = {
    "su3": lambda: su(3),
    "sym2 su4": lambda: sym_power(su(4), 2),
    "sym3 su2": lambda: sym_power(su(2), 3),
    "wedge3 su6": lambda: wedge_power(su(6), 3),
    "wedge2 su5 + su5": lambda: direct_sum([wedge_power(su(5), 2), su(5)], [1, 2]),
    "dual su4": lambda: dual_rep(su(4)),
    "su2 x su3": lambda: tensor(su(2), su(2)),
    "sp3": lambda: defining_rep(compact_algebra("sp", 3)),
    "so7": lambda: defining_rep(compact_algebra("so", 7)),
    "g2": g2_rep,
    "spin7": lambda: spin_rep(7),
    "spin10 even": lambda: spin_rep(10, "even"),
    "spin10 odd": lambda: spin_rep(10, "odd"),
}


@pytest.mark.parametrize("name", sorted(REPS))
def test_homomorphism_and_unitarity(name):
    rep = REPS[name]()
    assert rep.anti_hermitian_residual() < 1e-12
    assert rep.homomorphism_residual() < 1e-10
    assert rep.trace_residual() < 1e-10
    rep.validate()


@settings(max_examples=20, deadline=None)
@given(n=st.integers(2, 5), k=st.integers(1, 3))
def test_power_dimensions(n, k):
    assert sym_power(su(n), k).dim_v == comb(n + k - 1, k)
    if k <= n:
        assert wedge_power(su(n), k).dim_v == comb(n, k)


def test_tensor_embedding_is_isometric():
    rep = wedge_power(su(5), 2)
    e = rep.tensor_embedding
    assert np.allclose(e.conj().T @ e, np.eye(rep.dim_v), atol=1e-13)
    v = np.random.default_rng(0).normal(size=rep.dim_v)
    assert np.allclose(rep.from_tensor(rep.to_tensor(v)), v)


def test_from_tensor_rejects_non_symmetric():
    rep = sym_power(su(3), 2)
    with pytest.raises(RepresentationError):
        rep.from_tensor(np.array([[0, 1, 0], [0, 0, 0], [0, 0, 0]]))


def test_direct_sum_weights_scale_embedding():
    rep = direct_sum([su(2), su(2)], [1, 4])
    v = rep.embed([np.array([1, 0]), np.array([0, 1])])
    assert np.allclose(v, [1, 0, 0, 2])
    with pytest.raises(RepresentationError):
        rep.embed([np.array([1, 0])])


def eps(rep):
    return [w.epsilon_coords for w in weight_decomposition(rep).weights()]


def test_dual_weights_are_negated():
    d, w = eps(dual_rep(su(3))), eps(su(3))
    assert sorted(d) == sorted(tuple(-x for x in t) for t in w)


def test_weights_of_sym3_su2():
    w = eps(sym_power(su(2), 3))
    assert sorted(w) == sorted([(Fraction(k, 2), Fraction(-k, 2)) for k in (3, 1, -1, -3)])


def test_weights_of_wedge3_c6():
    wd = weight_decomposition(wedge_power(su(6), 3))
    assert len(wd.weights()) == 20
    assert wd.total_multiplicity == 20
    lam, _ = extreme_weight_vector(wedge_power(su(6), 3), 1)
    assert lam.epsilon_coords == (H, H, H, -H, -H, -H)


def test_highest_weight_vector_of_wedge3_is_e123():
    rep = wedge_power(su(6), 3)
    t = np.zeros((6, 6, 6))
    for p in permutations(range(3)):
        t[p] = np.linalg.det(np.eye(3)[list(p)])
    v = highest_weight_vector(rep)
    target = rep.from_tensor(t)
    assert abs(abs(np.vdot(target / np.linalg.norm(target), v)) - 1) < 1e-12


def test_g2_weights_are_short_roots_and_zero():
    w = set(eps(g2_rep()))
    third = Fraction(1, 3)
    shorts = {tuple(s * (x - third) for x in e) for e in np.eye(3, dtype=int).tolist() for s in (1, -1)}
    assert w == shorts | {(0, 0, 0)}


def test_spin7_weights():
    w = set(eps(spin_rep(7)))
    assert w == set(product((H, -H), repeat=3))


@pytest.mark.parametrize("n", [3, 4, 5, 8, 9])
def test_clifford_relations(n):
    gammas, _ = gamma_matrices(n)
    for a, ga in enumerate(gammas):
        assert np.allclose(ga, ga.conj().T)
        for b, gb in enumerate(gammas):
            assert np.allclose(ga @ gb + gb @ ga, 2 * (a == b) * np.eye(len(ga)), atol=1e-14)


def test_half_spin_dimensions_and_highest_weight():
    rep = spin_rep(12, "even")
    assert rep.dim_v == 32
    lam, v = extreme_weight_vector(rep, 1)
    assert lam.epsilon_coords == (H,) * 6
    assert np.allclose(v, fock_vector(rep, {(): 1}))


def test_spin_chirality_validation():
    with pytest.raises(RepresentationError):
        spin_rep(7, "even")
    with pytest.raises(RepresentationError):
        spin_rep(8, "full")


def test_fock_vector_rejects_wrong_parity():
    with pytest.raises(RepresentationError):
        fock_vector(spin_rep(10, "even"), {(1,): 1})


@pytest.mark.parametrize("make", [lambda: spin_rep(7), lambda: spin_rep(9), g2_rep,
                                  lambda: defining_rep(compact_algebra("so", 5))])
def test_real_type_representations(make):
    rep = make()
    c = real_structure(rep)
    assert c is not None
    for m in rep.matrices:
        assert np.allclose(m @ c, c @ m.conj(), atol=1e-10)
    b = real_basis(rep)
    assert np.allclose(b.conj().T @ b, np.eye(rep.dim_v), atol=1e-10)
    for m in rep.matrices:
        assert np.abs((b.conj().T @ m @ b).imag).max() < 1e-10


@pytest.mark.parametrize("make", [lambda: su(3), lambda: defining_rep(compact_algebra("sp", 2))])
def test_complex_and_quaternionic_types_have_no_real_form(make):
    assert real_structure(make()) is None


def test_isotypic_components_of_wedge3_sp3():
    rep = wedge_power(defining_rep(compact_algebra("sp", 3)), 3)
    dims = sorted(b.shape[1] for _, b in isotypic_components(rep))
    assert dims == [6, 14]


def test_casimir_is_scalar_on_irreducible():
    c = casimir(wedge_power(su(6), 3))
    assert np.allclose(c, c[0, 0] * np.eye(20), atol=1e-10)


def test_structure_file_round_trip(tmp_path):
    rep = sym_power(su(3), 2)
    path = tmp_path / "sym2.txt"
    write_structure_file(rep, path, comment="Sym^2 of su(3)")
    loaded = load_structure_file(path)
    assert loaded.dim_v == 6 and loaded.algebra.dim == 8
    # the loader renormalizes under -tr in the loaded space: a uniform rescaling here
    k = -np.trace(rep.matrices[0] @ rep.matrices[0]).real
    assert np.allclose(loaded.matrices, rep.matrices / np.sqrt(k), atol=1e-12)
    assert loaded.algebra.jacobi_residual() < 1e-12


@pytest.mark.parametrize("text,match", [
    ("", "empty"),
    ("3\n", "header"),
    ("1 2\n0 0 1 1.0\n", "expected"),
    ("1 2\n0 0 5 1.0 0.0\n", "out of range"),
    ("1 2\n0 0 1 1.0 0.0\n", "anti-Hermitian"),
])
def test_structure_file_errors(tmp_path, text, match):
    path = tmp_path / "bad.txt"
    path.write_text(text)
    with pytest.raises(RepresentationError, match=match):
        load_structure_file(path)
