"""A^(1)_n crystal combinatorics: combinatorial R, rigged configurations,
the vertex-operator KKR bijection and box-ball systems."""

from .boxball import BoxBallState, evolve, evolve_trace, inverse_scattering, scattering_data, soliton_content
from .classical import classical_path_to_rc, classical_rc_to_path
from .crystal import (
    AffineElement,
    CrystalElement,
    affine_R,
    combinatorial_R,
    energy_H,
    format_word,
    is_highest,
    parse_affine_word,
    parse_word,
)
from .rigged import RiggedConfiguration, enumerate_rcs, validate, vacancy
from .vertex import map_C, map_Phi, normal_order, rc_to_path

__all__ = [
    "AffineElement", "BoxBallState", "CrystalElement", "RiggedConfiguration",
    "affine_R", "classical_path_to_rc", "classical_rc_to_path", "combinatorial_R",
    "energy_H", "enumerate_rcs", "evolve", "evolve_trace", "format_word",
    "inverse_scattering", "is_highest", "map_C", "map_Phi", "normal_order",
    "parse_affine_word", "parse_word", "rc_to_path", "scattering_data",
    "soliton_content", "vacancy", "validate",
]
