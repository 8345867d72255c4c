"""Rees algebras of parametric plane curves via liftings to a rational normal scroll."""

from .field import GF32003, QQ, Field
from .mubasis import MuData, ParamCurve, SpaceCurve, compute_mudata, generate_instance
from .plane_rees import D_A, D_B, DD, dd_family, lift_and_check, madsen_A_lift, region_diagram
from .rees_space import rees_space_generators, tri_lift
from .ringmaps import ReesMaps
from .scroll import buchberger_check, scroll_generators
from .staircase import psi_count, staircase_min_gens

__all__ = [
    "Field", "QQ", "GF32003",
    "ParamCurve", "SpaceCurve", "MuData", "compute_mudata", "generate_instance",
    "ReesMaps", "scroll_generators", "buchberger_check",
    "staircase_min_gens", "psi_count", "tri_lift", "rees_space_generators",
    "D_A", "D_B", "DD", "dd_family", "lift_and_check", "madsen_A_lift", "region_diagram",
]
