"""Exact combinatorics of ad-nilpotent ideals of a Borel subalgebra of sl(n+1)."""
from __future__ import annotations

from .dyck import DyckPath, height, height_bijection, height_bijection_inverse, parse_path, rotation_path, twice_area
from .enumeration import count_atmost, count_class, count_exact_class
from .exact_math import BiPoly, UniPoly, binomial, catalan, det_exact, fibonacci, t_binomial
from .nilpotence import affine_window, class_fast, class_tableau, compute_filling, interval_bounds, touch_sequence
from .qt_catalan import Theta_max, Theta_min, extremal_witness, qt_catalan_formula, theta_max, theta_min
from .staircase import StaircasePartition, enumerate_all, make_partition, parse_partition

__version__ = "0.1.0"

__all__ = [
    "BiPoly", "DyckPath", "StaircasePartition", "Theta_max", "Theta_min", "UniPoly",
    "affine_window", "binomial", "catalan", "class_fast", "class_tableau", "compute_filling",
    "count_atmost", "count_class", "count_exact_class", "det_exact", "enumerate_all",
    "extremal_witness", "fibonacci", "height", "height_bijection", "height_bijection_inverse",
    "interval_bounds", "make_partition", "parse_partition", "parse_path", "qt_catalan_formula",
    "rotation_path", "t_binomial", "theta_max", "theta_min", "touch_sequence", "twice_area",
]
