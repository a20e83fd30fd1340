"""Exact enumeration and verification of Dyck-path statistics."""

from .paths import DyckPath, analyze, class_flags, enumerate_paths, parse_path
from .polynomial import Poly
from .series import Series

__all__ = ["DyckPath", "Poly", "Series", "analyze", "class_flags", "enumerate_paths", "parse_path"]
