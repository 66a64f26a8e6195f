"""Numerical radius computations and an executable catalog of numerical radius inequalities."""

from .blockops import block2, direct_sum, off_diag
from .decompositions import absolute_value, aluthge, cartesian, polar
from .errors import NumradError
from .radius import crawford, fov_boundary, numerical_radius, op_norm, spectral_radius, w
from .registry import evaluate, get_check, list_checks

__all__ = [
    "NumradError",
    "absolute_value",
    "aluthge",
    "block2",
    "cartesian",
    "crawford",
    "direct_sum",
    "evaluate",
    "fov_boundary",
    "get_check",
    "list_checks",
    "numerical_radius",
    "off_diag",
    "op_norm",
    "polar",
    "spectral_radius",
    "w",
]
