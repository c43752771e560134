"""Lagrangian orbits of compact simple groups acting on projective space."""
from ._kernels import backend
from .classification import (
    CaseResult,
    CaseSpec,
    case_table,
    castling_partner,
    candidate_point,
    identify_algebra,
    verify_case,
)
from .momentmap import (
    ProjectivePoint,
    complex_isotropy,
    is_open_orbit,
    kempf_ness_flow,
    moment,
    real_isotropy,
    verify_lagrangian,
)
from .roots import build_root_system, predicted_projective_isotropy_dim, weyl_dim

__version__ = "0.1.0"

__all__ = [
    "CaseResult", "CaseSpec", "ProjectivePoint", "backend", "build_root_system", "candidate_point",
    "case_table", "castling_partner", "complex_isotropy", "identify_algebra", "is_open_orbit",
    "kempf_ness_flow", "moment", "predicted_projective_isotropy_dim", "real_isotropy",
    "verify_case", "verify_lagrangian", "weyl_dim",
]
