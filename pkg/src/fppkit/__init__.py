"""Exact intersection arithmetic on quotients of fake projective planes."""
from .hj import HJString, hj_eval, hj_expand, uv_sequences
from .singularities import SingularityType, discrepancy, discrepancy_by_linear_solve
from .surface import SurfaceModel, compute_invariants, preset, quotient_presets
from .intersection import ExceptionalIncidence, e2, ek
from .fibers import FiberScenario, admissible_multiplicities, exclusion_report, solve, symmetric_solutions
from .classes import ClassOnFPP, TorsionGroup, chi, cube_roots_of_K, multiplicity2_exclusion
from .sections import VanishingPattern, section_independence
from .proof import claim_enumeration, kc_nonneg_fiber_argument, verify_paper

__version__ = "0.1.0"

__all__ = [
    "HJString", "hj_eval", "hj_expand", "uv_sequences",
    "SingularityType", "discrepancy", "discrepancy_by_linear_solve",
    "SurfaceModel", "compute_invariants", "preset", "quotient_presets",
    "ExceptionalIncidence", "e2", "ek",
    "FiberScenario", "admissible_multiplicities", "exclusion_report", "solve", "symmetric_solutions",
    "ClassOnFPP", "TorsionGroup", "chi", "cube_roots_of_K", "multiplicity2_exclusion",
    "VanishingPattern", "section_independence",
    "claim_enumeration", "kc_nonneg_fiber_argument", "verify_paper",
]
