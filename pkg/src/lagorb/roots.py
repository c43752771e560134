"""Root systems and weights of the simple Lie algebras, in exact arithmetic.

Everything here is rational: roots and weights are tuples of
:class:`fractions.Fraction` in the usual epsilon coordinates, so that
orthogonality tests such as ``<lam, alpha> == 0`` are decided exactly.

Realizations
------------
* ``A_l`` lives in the traceless hyperplane of Q^(l+1).
* ``B_l``, ``C_l``, ``D_l`` live in Q^l.
* ``G2`` lives in the sum-zero plane of Q^3, with the short roots the
  projections of the ``+-e_i`` (so the 7-dimensional weights come out as
  ``+-e_i`` projected, matching the SU(3) in G2 picture).
* ``F4`` lives in Q^4.
* ``E6`` and ``E7`` are sub-root-systems of the standard E8 lattice in Q^8
  (Bourbaki numbering: ``E6`` fundamental weight 1 is the 27, ``E7``
  fundamental weight 7 is the 56).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

import sympy

Vector = tuple  # tuple[Fraction, ...]

FAMILIES = ("A", "B", "C", "D", "E6", "E7", "F4", "G2")
_MIN_RANK = {"A": 1, "B": 1, "C": 1, "D": 2}
_FIXED_RANK = {"E6": 6, "E7": 7, "F4": 4, "G2": 2}


class UnsupportedTypeError(ValueError):
    pass


class NotDominantError(ValueError):
    pass


class SelfDualHypothesisError(ValueError):
    """The self-dual isotropy formula does not apply to this weight."""

    def __init__(self, message, offending=None):
        super().__init__(message)
        self.offending = offending


def vec(values: Iterable) -> Vector:
    return tuple(Fraction(x) for x in values)


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def add(a: Sequence, b: Sequence) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def scale(c, a: Sequence) -> Vector:
    c = Fraction(c)
    return tuple(c * x for x in a)


def _unit(i: int, n: int) -> Vector:
    return tuple(Fraction(int(k == i)) for k in range(n))


def _simple_roots(family: str, rank: int) -> tuple[int, list[Vector]]:
    half = Fraction(1, 2)
    if family == "A":
        n = rank + 1
        return n, [add(_unit(i, n), scale(-1, _unit(i + 1, n))) for i in range(rank)]
    if family in ("B", "C", "D"):
        n = rank
        chain = [add(_unit(i, n), scale(-1, _unit(i + 1, n))) for i in range(rank - 1)]
        if family == "B":
            last = _unit(rank - 1, n)
        elif family == "C":
            last = scale(2, _unit(rank - 1, n))
        else:
            last = add(_unit(rank - 2, n), _unit(rank - 1, n))
        return n, chain + [last]
    if family == "G2":
        third = Fraction(1, 3)
        return 3, [vec([-third, 2 * third, -third]), vec([1, -1, 0])]
    if family == "F4":
        return 4, [vec([0, 1, -1, 0]), vec([0, 0, 1, -1]), vec([0, 0, 0, 1]),
                   vec([half, -half, -half, -half])]
    if family in ("E6", "E7"):
        e8 = [
            vec([half, -half, -half, -half, -half, -half, -half, half]),
            vec([1, 1, 0, 0, 0, 0, 0, 0]),
            vec([-1, 1, 0, 0, 0, 0, 0, 0]),
            vec([0, -1, 1, 0, 0, 0, 0, 0]),
            vec([0, 0, -1, 1, 0, 0, 0, 0]),
            vec([0, 0, 0, -1, 1, 0, 0, 0]),
            vec([0, 0, 0, 0, -1, 1, 0, 0]),
        ]
        return 8, e8[:rank]
    raise UnsupportedTypeError(f"unsupported type {family}{rank}")


def _check_type(family: str, rank: int) -> None:
    if family in _FIXED_RANK:
        if rank != _FIXED_RANK[family]:
            raise UnsupportedTypeError(f"unsupported type {family} with rank {rank}")
    elif family in _MIN_RANK:
        if not isinstance(rank, int) or rank < _MIN_RANK[family]:
            raise UnsupportedTypeError(f"unsupported type {family}{rank}")
    else:
        raise UnsupportedTypeError(f"unsupported type {family}{rank}")


@dataclass(frozen=True)
class Weight:
    """A weight in both epsilon and fundamental-weight coordinates."""

    epsilon_coords: Vector
    fundamental_coords: tuple

    @property
    def is_dominant_integral(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self.fundamental_coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.epsilon_coords) + ")"


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    ambient_dim: int
    simple_roots: tuple
    positive_roots: tuple
    fundamental_weights: tuple
    cartan_matrix: tuple

    @property
    def name(self) -> str:
        return self.family if self.family in _FIXED_RANK else f"{self.family}{self.rank}"

    @cached_property
    def _gram_inverse(self):
        g = sympy.Matrix(self.rank, self.rank,
                         lambda i, j: sympy.Rational(dot(self.simple_roots[i], self.simple_roots[j])))
        ginv = g.inv()
        return tuple(tuple(Fraction(int(x.p), int(x.q)) for x in ginv.row(i)) for i in range(self.rank))

    @cached_property
    def rho(self) -> Vector:
        total = (Fraction(0),) * self.ambient_dim
        for a in self.positive_roots:
            total = add(total, a)
        return scale(Fraction(1, 2), total)

    @cached_property
    def roots(self) -> tuple:
        return self.positive_roots + tuple(scale(-1, a) for a in self.positive_roots)

    def coroot(self, alpha: Sequence) -> Vector:
        return scale(Fraction(2) / dot(alpha, alpha), alpha)

    def simple_coords(self, x: Sequence) -> tuple:
        """Coefficients of the orthogonal projection of x on the span of the simple roots."""
        rhs = [dot(x, a) for a in self.simple_roots]
        return tuple(dot(row, rhs) for row in self._gram_inverse)

    def project(self, x: Sequence) -> Vector:
        out = (Fraction(0),) * self.ambient_dim
        for c, a in zip(self.simple_coords(x), self.simple_roots):
            out = add(out, scale(c, a))
        return out

    def weight(self, epsilon_coords: Iterable) -> Weight:
        """Weight from epsilon coordinates (projected onto the span of the roots)."""
        x = self.project(vec(epsilon_coords))
        fund = tuple(dot(x, self.coroot(a)) for a in self.simple_roots)
        return Weight(x, fund)

    def weight_from_fundamental(self, coeffs: Iterable) -> Weight:
        coeffs = vec(coeffs)
        if len(coeffs) != self.rank:
            raise ValueError(f"expected {self.rank} fundamental coordinates, got {len(coeffs)}")
        x = (Fraction(0),) * self.ambient_dim
        for c, w in zip(coeffs, self.fundamental_weights):
            x = add(x, scale(c, w))
        return Weight(x, coeffs)

    def fundamental_weight(self, i: int) -> Weight:
        """The i-th fundamental weight, 1-based."""
        return self.weight_from_fundamental([int(k == i - 1) for k in range(self.rank)])


def _weyl_closure(simple: list) -> set:
    coroots = [scale(Fraction(2) / dot(a, a), a) for a in simple]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for x in frontier:
            for a, ac in zip(simple, coroots):
                y = add(x, scale(-dot(x, ac), a))
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    family = family.upper()
    _check_type(family, rank)
    ambient, simple = _simple_roots(family, rank)
    cartan = tuple(
        tuple(int(dot(a, scale(Fraction(2) / dot(b, b), b))) for b in simple) for a in simple
    )
    proto = RootSystem(family, rank, ambient, tuple(simple), (), (), cartan)
    roots = _weyl_closure(simple)
    positive = [r for r in roots if all(c >= 0 for c in proto.simple_coords(r))]
    # height, then lexicographic: deterministic order
    positive.sort(key=lambda r: (sum(proto.simple_coords(r)), tuple(-x for x in r)))
    # fundamental weights: Lambda_i = sum_k (A^-1)_{ik} alpha_k
    ainv = sympy.Matrix(cartan).inv()
    fund = []
    for i in range(rank):
        w = (Fraction(0),) * ambient
        for k in range(rank):
            c = ainv[i, k]
            w = add(w, scale(Fraction(int(c.p), int(c.q)), simple[k]))
        fund.append(w)
    return RootSystem(family, rank, ambient, tuple(simple), tuple(positive), tuple(fund), cartan)


def _require_dominant(lam: Weight) -> None:
    if not lam.is_dominant_integral:
        raise NotDominantError(f"weight {lam} is not dominant integral "
                               f"(fundamental coordinates {list(map(str, lam.fundamental_coords))})")


def a_lambda(rs: RootSystem, lam: Weight) -> frozenset:
    """Positive roots orthogonal to ``lam``."""
    _require_dominant(lam)
    return frozenset(a for a in rs.positive_roots if dot(lam.epsilon_coords, a) == 0)


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    _require_dominant(lam)
    lr = add(lam.epsilon_coords, rs.rho)
    num = Fraction(1)
    for a in rs.positive_roots:
        num *= dot(lr, a) / dot(rs.rho, a)
    assert num.denominator == 1
    return int(num)


def predicted_projective_isotropy_dim(rs: RootSystem, lam: Weight) -> int:
    """Complex dimension of the isotropy algebra at [v_lam + v_-lam].

    Valid for self-dual representations when 2*lam is neither a positive root
    nor a sum of two positive roots; otherwise raises SelfDualHypothesisError.
    """
    _require_dominant(lam)
    if all(x == 0 for x in lam.epsilon_coords):
        raise ValueError("highest weight must be non-zero")
    two = scale(2, lam.epsilon_coords)
    pos = set(rs.positive_roots)
    if two in pos:
        raise SelfDualHypothesisError(f"selfdual-hypotheses-failed: 2*lambda = {_fmt(two)} is a positive root",
                                      offending=(two,))
    for a, b in combinations_with_replacement(rs.positive_roots, 2):
        if add(a, b) == two:
            raise SelfDualHypothesisError(
                f"selfdual-hypotheses-failed: 2*lambda = {_fmt(a)} + {_fmt(b)}", offending=(a, b))
    return (rs.rank - 1) + 2 * len(a_lambda(rs, lam))


def _fmt(x: Sequence) -> str:
    return "(" + ", ".join(str(c) for c in x) + ")"
