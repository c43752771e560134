"""The 21 simple-group actions on P(V) with a Lagrangian orbit, and their checks.

Each row of the classification is a :class:`CaseSpec` holding the expected
dimensions, a recipe for the representation and one for the candidate
point. :func:`verify_case` builds both and measures everything the table
claims that can be measured: ``mu = 0``, the orbit dimension, the identity
component of the stabilizer. The component group and the invariant degree
are carried as table metadata only.
"""
from __future__ import annotations

import time
from fractions import Fraction
from itertools import permutations
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from . import momentmap as mm
from .algebras import compact_algebra
from .representations import (
    Representation,
    RepresentationError,
    _perm_sign,
    defining_rep,
    direct_sum,
    dual_rep,
    extreme_weight_vector,
    fock_vector,
    g2_rep,
    isotypic_components,
    load_structure_file,
    real_basis,
    spin_rep,
    subrepresentation,
    sym_power,
    wedge_power,
    weight_decomposition,
)
from .roots import build_root_system, predicted_projective_isotropy_dim, weyl_dim


class MatricesUnavailableError(RuntimeError):
    pass


class RecipeError(ValueError):
    pass


# -- compact algebras that can show up as identity components of stabilizers ------

def _dictionary() -> dict:
    table = {"trivial": (0, 0, 0), "so(2)": (1, 1, 1)}
    for k in range(2, 11):
        table[f"su({k})"] = (k * k - 1, k - 1, 0)
    for k in range(1, 9):
        table[f"sp({k})"] = (k * (2 * k + 1), k, 0)
    for k in range(3, 17):
        if k == 4:
            table["so(4)"] = (6, 2, 0)
            continue
        table[f"so({k})"] = (k * (k - 1) // 2, k // 2, 0)
    table.update({"g2": (14, 2, 0), "f4": (52, 4, 0), "e6": (78, 6, 0), "e7": (133, 7, 0),
                  "su(3)+su(3)": (16, 4, 0), "g2+g2": (28, 4, 0)})
    return table


ALGEBRA_DICTIONARY = _dictionary()


@dataclass(frozen=True)
class Identification:
    names: tuple
    dim: int
    rank: int
    center_dim: int

    @property
    def recognized(self) -> bool:
        return bool(self.names)

    def __str__(self):
        raw = f"(dim {self.dim}, rank {self.rank}, center {self.center_dim})"
        return (" | ".join(self.names) + " " + raw) if self.names else f"unrecognized algebra {raw}"


def identify_algebra(iso: mm.IsotropySubalgebra) -> Identification:
    """Names in the dictionary matching (dim, rank, center_dim); may be several."""
    key = (iso.dim, iso.rank, iso.center_dim)
    names = tuple(sorted(n for n, t in ALGEBRA_DICTIONARY.items() if t == key))
    return Identification(names, *key)


# -- castling -----------------------------------------------------------------------

@dataclass(frozen=True)
class CastlingTriple:
    """(G~ x SL(n), rho~ (x) Lambda_1, V(m) (x) V(n)), with rho~ dualized if ``dual``."""

    factor_dims: tuple
    m: int
    n: int
    dual: bool = False

    def __post_init__(self):
        if not self.m > self.n >= 1:
            raise ValueError(f"castling needs m > n >= 1, got m={self.m}, n={self.n}")

    @property
    def group(self) -> str:
        return f"G~ x SL({self.n})"

    @property
    def space(self) -> str:
        star = "*" if self.dual else ""
        return f"V({self.m}){star} (x) V({self.n})"

    @property
    def dim(self) -> int:
        return self.m * self.n


def castling_partner(t: CastlingTriple) -> CastlingTriple:
    return CastlingTriple(t.factor_dims, t.m, t.m - t.n, not t.dual)


# -- case table -------------------------------------------------------------------------

@dataclass(frozen=True)
class CaseSpec:
    row: int
    group: str
    rep: str
    table_proj_dim: str  # column 4, verbatim
    proj_dim: Callable  # n -> dim_C P(V)
    isotropy: str  # column K_p^0, verbatim
    isotropy_algebra: Callable  # n -> dictionary name
    isotropy_dim: Callable
    component_group: str
    invariant_degree: str
    point_recipe: str  # explicit | real | selfdual | flow
    params_constraint: str = ""
    test_ns: tuple = (None,)
    matrix_available: bool = True
    highest_weights: Callable | None = None  # n -> list[(RootSystem, Weight)]
    table_proj_dim_value: Callable | None = None  # n -> value printed in column 4
    note: str = ""
    seed: int = 0

    @property
    def parametric(self) -> bool:
        return self.test_ns != (None,)

    def metadata(self) -> dict:
        return {"K_p/K_p0": self.component_group, "d": self.invariant_degree,
                "label": "table metadata, not verified"}


def _fw(rs, i, k=1):
    return rs.weight_from_fundamental([k * int(j == i - 1) for j in range(rs.rank)])


def _hw(family, rank, i, k=1):
    """(root system, k times fundamental weight i) for a single summand."""
    rs = build_root_system(family, rank)
    return rs, _fw(rs, i, k)


def _so_rs(n):
    return build_root_system("B", n // 2) if n % 2 else build_root_system("D", n // 2)


def _half(rs):
    return rs.weight([Fraction(1, 2)] * rs.ambient_dim)


def _table() -> list[CaseSpec]:
    rows = [
        CaseSpec(1, "SU(n)", "2Λ1", "n(n+1)/2-1", lambda n: n * (n + 1) // 2 - 1, "SO(n)",
                 lambda n: f"so({n})", lambda n: n * (n - 1) // 2, "Z_n", "n", "explicit",
                 "n >= 2", (3, 4), highest_weights=lambda n: [_hw("A", n - 1, 1, 2)]),
        CaseSpec(2, "SU(n)", "Λ1 ⊕ Λ1*", "2n-1", lambda n: 2 * n - 1, "SU(n-1)",
                 lambda n: "trivial" if n == 2 else f"su({n - 1})", lambda n: (n - 1) ** 2 - 1, "Z_2", "2",
                 "explicit", "n >= 2", (2, 3),
                 highest_weights=lambda n: [_hw("A", n - 1, 1), _hw("A", n - 1, n - 1)]),
        CaseSpec(3, "SU(n)", "Λ1 ⊕ ... ⊕ Λ1 (n times)", "n^2-1", lambda n: n * n - 1, "{1}",
                 lambda n: "trivial", lambda n: 0, "Z_n", "n", "explicit", "n >= 2", (2, 3),
                 highest_weights=lambda n: [_hw("A", n - 1, 1)] * n),
        CaseSpec(4, "SU(2n)", "Λ2", "n(2n-1)-1", lambda n: n * (2 * n - 1) - 1, "Sp(n)",
                 lambda n: f"sp({n})", lambda n: n * (2 * n + 1), "Z_2n", "2n", "explicit",
                 "n >= 3", (3, 4), highest_weights=lambda n: [_hw("A", 2 * n - 1, 2)]),
        CaseSpec(5, "SU(2n+1)", "Λ2 ⊕ Λ1", "2n^2+3n+1", lambda n: 2 * n * n + 3 * n, "Sp(n)",
                 lambda n: f"sp({n})", lambda n: n * (2 * n + 1), "Z_(n+1)", "n+1", "explicit",
                 "n >= 2", (2, 3),
                 highest_weights=lambda n: [_hw("A", 2 * n, 2), _hw("A", 2 * n, 1)],
                 table_proj_dim_value=lambda n: 2 * n * n + 3 * n + 1,
                 note="column 4 prints 2n^2+3n+1 = dim V; dim P(V) is 2n^2+3n"),
        CaseSpec(6, "SU(2)", "3Λ1", "3", lambda n: 3, "{1}", lambda n: "trivial", lambda n: 0,
                 "Z_3 ⋊ Z_4", "4", "explicit", highest_weights=lambda n: [_hw("A", 1, 1, 3)]),
        CaseSpec(7, "SU(6)", "Λ3", "19", lambda n: 19, "SU(3)×SU(3)", lambda n: "su(3)+su(3)",
                 lambda n: 16, "Z_4", "4", "explicit", highest_weights=lambda n: [_hw("A", 5, 3)]),
        CaseSpec(8, "SU(7)", "Λ3", "34", lambda n: 34, "G2", lambda n: "g2", lambda n: 14, "Z_7", "7",
                 "flow", highest_weights=lambda n: [_hw("A", 6, 3)]),
        CaseSpec(9, "SU(8)", "Λ3", "55", lambda n: 55, "Ad(SU(3))", lambda n: "su(3)", lambda n: 8,
                 "Z_16", "16", "flow", highest_weights=lambda n: [_hw("A", 7, 3)]),
        CaseSpec(10, "Sp(n)", "Λ1 ⊕ Λ1", "4n-1", lambda n: 4 * n - 1, "Sp(n-1)",
                 lambda n: "trivial" if n == 1 else f"sp({n - 1})", lambda n: (n - 1) * (2 * n - 1), "Z_2", "2",
                 "explicit", "n >= 1", (2, 3),
                 highest_weights=lambda n: [_hw("C", n, 1)] * 2),
        CaseSpec(11, "Sp(3)", "Λ3", "13", lambda n: 13, "SU(3)", lambda n: "su(3)", lambda n: 8, "Z_4", "4",
                 "explicit", highest_weights=lambda n: [_hw("C", 3, 3)]),
        CaseSpec(12, "SO(n)", "Λ1", "n-1", lambda n: n - 1, "SO(n-1)",
                 lambda n: {3: "so(2)", 4: "so(3)"}.get(n, f"so({n - 1})"),
                 lambda n: (n - 1) * (n - 2) // 2, "Z_2", "2", "explicit", "n >= 3", (3, 7),
                 highest_weights=lambda n: [(_so_rs(n), _so_rs(n).weight([1] + [0] * (n // 2 - 1)))]),
        CaseSpec(13, "Spin(7)", "spin rep.", "7", lambda n: 7, "G2", lambda n: "g2", lambda n: 14, "Z_2", "2",
                 "real", highest_weights=lambda n: [(_so_rs(7), _half(_so_rs(7)))]),
        CaseSpec(14, "Spin(9)", "spin rep.", "15", lambda n: 15, "Spin(7)", lambda n: "so(7)", lambda n: 21,
                 "Z_2", "2", "real", highest_weights=lambda n: [(_so_rs(9), _half(_so_rs(9)))]),
        CaseSpec(15, "Spin(10)", "Λe ⊕ Λe", "31", lambda n: 31, "G2", lambda n: "g2", lambda n: 14, "-", "4",
                 "explicit", highest_weights=lambda n: [(_so_rs(10), _half(_so_rs(10)))] * 2),
        CaseSpec(16, "Spin(11)", "spin rep.", "31", lambda n: 31, "SU(5)", lambda n: "su(5)", lambda n: 24,
                 "Z_4", "4", "flow", highest_weights=lambda n: [(_so_rs(11), _half(_so_rs(11)))]),
        CaseSpec(17, "Spin(12)", "Λe", "31", lambda n: 31, "SU(6)", lambda n: "su(6)", lambda n: 35, "Z_4", "4",
                 "selfdual", highest_weights=lambda n: [(_so_rs(12), _half(_so_rs(12)))]),
        CaseSpec(18, "Spin(14)", "Λe", "63", lambda n: 63, "G2×G2", lambda n: "g2+g2", lambda n: 28, "Z_8", "8",
                 "flow", highest_weights=lambda n: [(_so_rs(14), _half(_so_rs(14)))]),
        CaseSpec(19, "E6", "Λ1", "26", lambda n: 26, "F4", lambda n: "f4", lambda n: 52, "Z_3", "3", "flow",
                 matrix_available=False,
                 highest_weights=lambda n: [_hw("E6", 6, 1)],
                 note="27-dim matrices only via --e6-data"),
        CaseSpec(20, "E7", "Λ1", "55", lambda n: 55, "E6", lambda n: "e6", lambda n: 78, "-", "4", "selfdual",
                 matrix_available=False,
                 highest_weights=lambda n: [_hw("E7", 7, 7)],
                 note="root-system level only; the 56 is fundamental weight 7 in Bourbaki numbering"),
        CaseSpec(21, "G2", "Λ2", "6", lambda n: 6, "SU(3)", lambda n: "su(3)", lambda n: 8, "Z_2", "2", "real",
                 highest_weights=lambda n: [_hw("G2", 2, 1)]),
    ]
    return rows


_TABLE = tuple(_table())


def case_table() -> list[CaseSpec]:
    return list(_TABLE)


def get_case(row: int) -> CaseSpec:
    if not 1 <= row <= len(_TABLE):
        raise RecipeError(f"row must be in 1..{len(_TABLE)}, got {row}")
    return _TABLE[row - 1]


def resolve_n(spec: CaseSpec, n: int | None) -> int | None:
    if not spec.parametric:
        if n is not None:
            raise RecipeError(f"row {spec.row} takes no parameter n")
        return None
    if n is None:
        return spec.test_ns[0]
    minimum = int(spec.params_constraint.split(">=")[1])
    if n < minimum:
        raise RecipeError(f"row {spec.row} requires {spec.params_constraint}, got n={n}")
    return n


def weyl_dim_total(spec: CaseSpec, n: int | None = None) -> int:
    """Sum of Weyl dimensions over the summands of the row's representation."""
    return sum(weyl_dim(rs, lam) for rs, lam in spec.highest_weights(n))


# -- representations and points per row ---------------------------------------------

def _su(n):
    return defining_rep(compact_algebra("su", n))


def _antisym_j(n, offset=0):
    size = 2 * n + offset
    j = np.zeros((size, size))
    j[offset:offset + n, offset + n:] = -np.eye(n)
    j[offset + n:, offset:offset + n] = np.eye(n)
    return j


def _wedge3_point(rep):
    """(e1^e2^e3 + e4^e5^e6)/sqrt(2) in the normalized wedge basis of C^6."""
    t = np.zeros((6,) * 3)
    for trip in ((0, 1, 2), (3, 4, 5)):
        for perm in permutations(range(3)):
            t[tuple(trip[p] for p in perm)] += _perm_sign(perm)
    return rep.from_tensor(t)


def _sp3_wedge3():
    """Lambda^3 of sp(3) restricted to its 14-dimensional irreducible summand."""
    full = wedge_power(defining_rep(compact_algebra("sp", 3)), 3)
    comps = [b for _, b in isotypic_components(full) if b.shape[1] == 14]
    if len(comps) != 1:
        raise RepresentationError("could not isolate the 14-dimensional summand of Λ^3 C^6")
    sub = subrepresentation(full, comps[0], "Λ3 of sp(3) (dim 14)")
    return full, comps[0], sub


@lru_cache(maxsize=None)
def build_representation(row: int, n: int | None = None, e6_data: str | None = None) -> Representation:
    spec = get_case(row)
    n = resolve_n(spec, n)
    if row == 1:
        return sym_power(_su(n), 2)
    if row == 2:
        d = _su(n)
        return direct_sum([d, dual_rep(d)], [1, 1])
    if row == 3:
        return direct_sum([_su(n)] * n)
    if row == 4:
        return wedge_power(_su(2 * n), 2)
    if row == 5:
        d = _su(2 * n + 1)
        return direct_sum([wedge_power(d, 2), d], [1, 2])
    if row == 6:
        return sym_power(_su(2), 3)
    if row in (7, 8, 9):
        return wedge_power(_su(row - 1), 3)
    if row == 10:
        d = defining_rep(compact_algebra("sp", n))
        return direct_sum([d, d])
    if row == 11:
        return _sp3_wedge3()[2]
    if row == 12:
        return defining_rep(compact_algebra("so", n))
    if row in (13, 14, 16):
        return spin_rep({13: 7, 14: 9, 16: 11}[row], "full")
    if row == 15:
        h = spin_rep(10, "even")
        return direct_sum([h, h])
    if row in (17, 18):
        return spin_rep({17: 12, 18: 14}[row], "even")
    if row == 19:
        if e6_data is None:
            raise MatricesUnavailableError("row 19: matrices unavailable (supply --e6-data)")
        rep = load_structure_file(e6_data, name="e6")
        if rep.algebra.dim != 78 or rep.dim_v != 27:
            raise RepresentationError(f"e6 data has shape ({rep.algebra.dim}, {rep.dim_v}), expected (78, 27)")
        return rep
    if row == 20:
        raise MatricesUnavailableError("row 20: matrices unavailable (E7 is checked at root-system level only)")
    if row == 21:
        return g2_rep()
    raise RecipeError(f"no recipe for row {row}")


def selfdual_point(rep: Representation) -> np.ndarray:
    """(v_lam + v_-lam)/sqrt(2) from the extreme weight spaces."""
    wd = weight_decomposition(rep)
    lam, vp = extreme_weight_vector(rep, 1, wd)
    low, vm = extreme_weight_vector(rep, -1, wd)
    if tuple(-x for x in lam.epsilon_coords) != low.epsilon_coords:
        raise RepresentationError(f"{rep.label} is not self-dual: lowest weight is not -{lam}")
    return (vp + vm) / np.sqrt(2)


def candidate_point(spec: CaseSpec, n: int | None = None, rep: Representation | None = None,
                    recipe: str | None = None) -> mm.ProjectivePoint:
    recipe = recipe or spec.point_recipe
    if recipe == "flow":
        raise RecipeError(f"row {spec.row}: no explicit point; use kempf_ness_flow")
    n = resolve_n(spec, n)
    rep = rep or build_representation(spec.row, n)
    row = spec.row
    if recipe == "selfdual":
        return mm.ProjectivePoint(selfdual_point(rep))
    if recipe == "real":
        if np.abs(rep.matrices.imag).max() == 0:
            e = np.zeros(rep.dim_v)
            e[0] = 1
            return mm.ProjectivePoint(e)
        return mm.ProjectivePoint(real_basis(rep)[:, 0])
    if recipe != "explicit":
        raise RecipeError(f"unknown point recipe {recipe!r}")
    if row == 1:
        return mm.ProjectivePoint(rep.from_tensor(np.eye(n)))
    if row == 2:
        e = np.eye(n)[0]
        return mm.ProjectivePoint(rep.embed([e, e]))
    if row == 3:
        return mm.ProjectivePoint(rep.embed(list(np.eye(n))))
    if row == 4:
        return mm.ProjectivePoint(rep.from_tensor(_antisym_j(n)))
    if row == 5:
        l2 = wedge_power(_su(2 * n + 1), 2)
        # J~ = diag(0, J_n), kernel spanned by e1
        return mm.ProjectivePoint(rep.embed([l2.from_tensor(_antisym_j(n, offset=1)), np.eye(2 * n + 1)[0]]))
    if row == 6:
        t = np.zeros((2, 2, 2))
        t[0, 0, 0] = t[1, 1, 1] = 1  # z1^3 + z2^3
        return mm.ProjectivePoint(rep.from_tensor(t))
    if row == 7:
        return mm.ProjectivePoint(_wedge3_point(rep))
    if row == 10:
        # e1 and its symplectic partner e_{n+1} (J = [[0, I], [-I, 0]])
        e = np.eye(2 * n)
        return mm.ProjectivePoint(rep.embed([e[0], e[n]]))
    if row == 11:
        full, basis, _ = _sp3_wedge3()
        v = _wedge3_point(full)
        coords = basis.conj().T @ v
        if abs(np.linalg.norm(coords) - np.linalg.norm(v)) > 1e-12:
            raise RepresentationError("row 11 point is not in the 14-dimensional summand")
        return mm.ProjectivePoint(coords)
    if row == 12:
        return mm.ProjectivePoint(np.eye(n)[0])
    if row == 15:
        h = spin_rep(10, "even")
        a = fock_vector(h, {(): 1, (1, 2, 3, 4): 1})
        b = fock_vector(h, {(1, 5): 1, (2, 3, 4, 5): 1})
        return mm.ProjectivePoint(rep.embed([a, b]))
    raise RecipeError(f"row {row} has no explicit point")


# -- verification -------------------------------------------------------------------------

REPORT_FIELDS = ("row", "group", "rep", "n", "point_recipe", "mu_norm", "orbit_dim", "expected_dim",
                 "isotropy_dim", "expected_isotropy_dim", "identified", "pass", "seconds")

REPORT_SCHEMA = {
    "type": "object",
    "required": list(REPORT_FIELDS),
    "properties": {
        "row": {"type": "integer", "minimum": 1, "maximum": 21},
        "group": {"type": "string"},
        "rep": {"type": "string"},
        "n": {"type": ["integer", "null"]},
        "point_recipe": {"type": "string"},
        "mu_norm": {"type": ["number", "null"]},
        "orbit_dim": {"type": ["integer", "null"]},
        "expected_dim": {"type": "integer"},
        "isotropy_dim": {"type": ["integer", "null"]},
        "expected_isotropy_dim": {"type": "integer"},
        "identified": {"type": ["string", "null"]},
        "pass": {"type": ["boolean", "null"]},
        "seconds": {"type": ["number", "null"]},
    },
}


@dataclass
class CaseResult:
    row: int
    n: int | None
    spec: CaseSpec = field(repr=False)
    point_recipe: str = ""
    mu_norm: float | None = None
    orbit_dim: int | None = None
    isotropy_dim: int | None = None
    isotropy_center_dim: int | None = None
    isotropy_rank: int | None = None
    identified: Identification | None = None
    checks: dict = field(default_factory=dict)
    passed: bool | None = None
    wall_time: float | None = None
    point: mm.ProjectivePoint | None = field(default=None, repr=False)
    flow: mm.FlowResult | None = field(default=None, repr=False)
    detail: dict = field(default_factory=dict)

    @property
    def expected_dim(self) -> int:
        return self.spec.proj_dim(self.n)

    @property
    def expected_isotropy_dim(self) -> int:
        return self.spec.isotropy_dim(self.n)

    def to_record(self, timing: bool = True) -> dict:
        rec = {
            "row": self.row,
            "group": self.spec.group,
            "rep": self.spec.rep,
            "n": self.n,
            "point_recipe": self.point_recipe,
            "mu_norm": self.mu_norm,
            "orbit_dim": self.orbit_dim,
            "expected_dim": self.expected_dim,
            "isotropy_dim": self.isotropy_dim,
            "expected_isotropy_dim": self.expected_isotropy_dim,
            "identified": str(self.identified) if self.identified is not None else None,
            "pass": self.passed,
            "seconds": round(self.wall_time, 3) if (timing and self.wall_time is not None) else None,
            "isotropy_center_dim": self.isotropy_center_dim,
            "isotropy_rank": self.isotropy_rank,
            "expected_isotropy": self.spec.isotropy,
            "checks": self.checks,
            "table_metadata": self.spec.metadata(),
        }
        if self.detail:
            rec["detail"] = self.detail
        return rec


def root_level_result(spec: CaseSpec) -> CaseResult:
    """Metadata-only result for rows without matrices."""
    detail = {"weyl_dim": weyl_dim_total(spec), "matrix_available": False}
    if spec.point_recipe == "selfdual":
        rs, lam = spec.highest_weights(None)[0]
        detail["predicted_isotropy_dim"] = predicted_projective_isotropy_dim(rs, lam)
    return CaseResult(spec.row, None, spec, spec.point_recipe, detail=detail)


def verify_case(spec: CaseSpec, n: int | None = None, seed: int | None = None, tol: float = 1e-9,
                recipe: str | None = None, e6_data: str | None = None, max_iter: int = 20000,
                polish_tol: float = 1e-12) -> CaseResult:
    """Build the row's representation and point, then certify the orbit.

    Flow rows descend to ``polish_tol`` (well below ``tol``) before the
    isotropy rank is read off, so that near-zero singular values are
    separated from the kept ones.
    """
    t0 = time.perf_counter()
    n = resolve_n(spec, n)
    rep = build_representation(spec.row, n, e6_data)
    recipe = recipe or spec.point_recipe
    seed = spec.seed if seed is None else seed
    result = CaseResult(spec.row, n, spec, recipe)
    if recipe == "flow":
        flow = mm.kempf_ness_flow(rep, seed=seed, tol=min(tol, polish_tol), max_iter=max_iter)
        result.flow = flow
        result.detail["flow_iterations"] = flow.iterations
        p = flow.final_point
    else:
        p = candidate_point(spec, n, rep, recipe)
    result.point = p
    cert = mm.verify_lagrangian(rep, p, tol)
    iso = mm.real_isotropy(rep, p)
    ident = identify_algebra(iso)
    minimal = mm.check_minimal(rep, p, tol)
    result.mu_norm = cert.mu_norm
    result.orbit_dim = cert.orbit_dim
    result.isotropy_dim = iso.dim
    result.isotropy_center_dim = iso.center_dim
    result.isotropy_rank = iso.rank
    result.identified = ident
    expected_name = spec.isotropy_algebra(n)
    result.checks = {
        "mu_zero": cert.mu_norm < tol,
        "orbit_dim": cert.orbit_dim == spec.proj_dim(n),
        "omega_vanishes": cert.omega_residual < tol,
        "open_orbit": cert.open_orbit,
        "isotropy_dim": iso.dim == spec.isotropy_dim(n),
        "identified": expected_name in ident.names,
        "center": iso.center_dim == ALGEBRA_DICTIONARY[expected_name][2],
        "orbit_stabilizer": rep.algebra.dim == cert.orbit_dim + iso.dim,
        "minimal": minimal,
    }
    result.detail["omega_residual"] = cert.omega_residual
    result.passed = all(result.checks.values())
    result.wall_time = time.perf_counter() - t0
    return result


def verify_row(row: int, n: int | None = None, seed: int | None = None, tol: float = 1e-9,
               e6_data: str | None = None) -> CaseResult:
    spec = get_case(row)
    if not spec.matrix_available and not (row == 19 and e6_data):
        raise MatricesUnavailableError(f"row {row}: matrices unavailable")
    return verify_case(spec, n, seed, tol, e6_data=e6_data)
