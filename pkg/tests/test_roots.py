from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lagorb.roots import (
    NotDominantError,
    SelfDualHypothesisError,
    UnsupportedTypeError,
    a_lambda,
    build_root_system,
    dot,
    predicted_projective_isotropy_dim,
    weyl_dim,
)


def e8_roots():
    """All 240 roots of E8 in the even coordinate system."""
    out = set()
    for i, j in combinations(range(8), 2):
        for si, sj in product((1, -1), repeat=2):
            v = [Fraction(0)] * 8
            v[i], v[j] = Fraction(si), Fraction(sj)
            out.add(tuple(v))
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            out.add(tuple(Fraction(s, 2) for s in signs))
    return out


@pytest.mark.parametrize("family,rank,expected", [
    ("A", 1, 1), ("A", 5, 15), ("B", 3, 9), ("C", 3, 9), ("D", 7, 42),
    ("G2", 2, 6), ("F4", 4, 24), ("E6", 6, 36), ("E7", 7, 63),
])
def test_positive_root_counts(family, rank, expected):
    assert len(build_root_system(family, rank).positive_roots) == expected


def test_e8_oracle_has_240_roots():
    assert len(e8_roots()) == 240


def test_e7_matches_e8_sublattice():
    # E7 = roots of E8 orthogonal to e7 + e8
    expected = {r for r in e8_roots() if r[6] == -r[7]}
    assert set(map(tuple, build_root_system("E7", 7).roots)) == expected


def test_e6_matches_e8_sublattice():
    expected = {r for r in e8_roots() if r[5] == r[6] == -r[7]}
    assert set(map(tuple, build_root_system("E6", 6).roots)) == expected


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 4), ("C", 3), ("D", 5), ("G2", 2), ("F4", 4), ("E6", 6)])
def test_cartan_matrix_from_simple_roots(family, rank):
    rs = build_root_system(family, rank)
    for i, a in enumerate(rs.simple_roots):
        for j, b in enumerate(rs.simple_roots):
            assert rs.cartan_matrix[i][j] == 2 * dot(a, b) / dot(b, b)
        assert rs.cartan_matrix[i][i] == 2


@pytest.mark.parametrize("family,rank", [("A", 4), ("B", 3), ("C", 4), ("D", 4), ("G2", 2), ("E7", 7)])
def test_fundamental_weights_are_dual_to_coroots(family, rank):
    rs = build_root_system(family, rank)
    for i, w in enumerate(rs.fundamental_weights):
        for j, a in enumerate(rs.simple_roots):
            assert dot(w, rs.coroot(a)) == int(i == j)


def test_g2_simple_roots_in_sum_zero_plane():
    rs = build_root_system("G2", 2)
    short, long_ = rs.simple_roots
    assert dot(long_, long_) == 3 * dot(short, short)
    assert all(sum(r) == 0 for r in rs.roots)


@pytest.mark.parametrize("family,rank,index,expected", [
    ("A", 5, 3, 20),  # wedge^3 C^6
    ("E7", 7, 7, 56),
    ("E6", 6, 1, 27),
    ("G2", 2, 1, 7),
    ("D", 7, 7, 64),  # half-spin of so(14)
    ("B", 3, 3, 8),  # spin of so(7)
    ("C", 3, 3, 14),  # primitive wedge^3 of C^6
    ("F4", 4, 4, 26),
])
def test_weyl_dim_known_values(family, rank, index, expected):
    rs = build_root_system(family, rank)
    assert weyl_dim(rs, rs.fundamental_weight(index)) == expected


def test_weyl_dim_from_epsilon_coordinates():
    rs = build_root_system("A", 1)
    lam = rs.weight([3, 0])
    assert lam.epsilon_coords == (Fraction(3, 2), Fraction(-3, 2))
    assert weyl_dim(rs, lam) == 4


@settings(max_examples=25, deadline=None)
@given(n=st.integers(2, 6), k=st.integers(1, 4))
def test_weyl_dim_symmetric_powers(n, k):
    rs = build_root_system("A", n - 1)
    lam = rs.weight_from_fundamental([k] + [0] * (n - 2))
    assert weyl_dim(rs, lam) == comb(n + k - 1, k)


@settings(max_examples=25, deadline=None)
@given(n=st.integers(2, 7), data=st.data())
def test_weyl_dim_exterior_powers(n, data):
    k = data.draw(st.integers(1, n - 1))
    rs = build_root_system("A", n - 1)
    assert weyl_dim(rs, rs.fundamental_weight(k)) == comb(n, k)


def test_weyl_dim_by_counting_weights_of_tensor_power():
    # weights of Sym^2 C^3 are e_i + e_j; Weyl gives their number
    rs = build_root_system("A", 2)
    weights = {tuple(sum(x) for x in zip(*(([1 if t == i else 0 for t in range(3)]) for i in c)))
               for c in combinations_with_replacement(range(3), 2)}
    assert weyl_dim(rs, rs.weight_from_fundamental([2, 0])) == len(weights)


def test_weyl_dim_rejects_non_dominant():
    rs = build_root_system("A", 2)
    with pytest.raises(NotDominantError):
        weyl_dim(rs, rs.weight_from_fundamental([-1, 0]))


@pytest.mark.parametrize("family,rank", [("A", 0), ("D", 1), ("E6", 5), ("H", 3)])
def test_unsupported_types(family, rank):
    with pytest.raises(UnsupportedTypeError):
        build_root_system(family, rank)


def test_predicted_isotropy_wedge3_c6():
    rs = build_root_system("A", 5)
    lam = rs.fundamental_weight(3)
    assert len(a_lambda(rs, lam)) == 6
    assert predicted_projective_isotropy_dim(rs, lam) == 16


def test_predicted_isotropy_e7():
    rs = build_root_system("E7", 7)
    assert predicted_projective_isotropy_dim(rs, rs.fundamental_weight(7)) == 78


def test_predicted_isotropy_binary_cubics():
    rs = build_root_system("A", 1)
    assert predicted_projective_isotropy_dim(rs, rs.weight_from_fundamental([3])) == 0


def test_predicted_isotropy_half_spin_so12():
    rs = build_root_system("D", 6)
    assert predicted_projective_isotropy_dim(rs, rs.fundamental_weight(6)) == 35


def test_selfdual_hypothesis_fails_for_vector_rep():
    # 2 e1 = (e1 - e2) + (e1 + e2) lies in R+ + R+
    rs = build_root_system("D", 4)
    with pytest.raises(SelfDualHypothesisError, match="selfdual-hypotheses-failed"):
        predicted_projective_isotropy_dim(rs, rs.fundamental_weight(1))


def test_selfdual_hypothesis_fails_for_adjoint():
    rs = build_root_system("A", 2)
    with pytest.raises(SelfDualHypothesisError):
        predicted_projective_isotropy_dim(rs, rs.weight_from_fundamental([1, 1]))
