"""Quantum LDPC codes from Euclidean-geometry incidence structures."""

from egqldpc.binmat import BinMatrix
from egqldpc.construct import CodeSpec, build_matrix, code_summary
from egqldpc.geometry import Geometry, build_geometry
from egqldpc.quantum import StabilizerCode, css_from_self_orthogonal

__all__ = [
    "BinMatrix",
    "CodeSpec",
    "Geometry",
    "StabilizerCode",
    "build_geometry",
    "build_matrix",
    "code_summary",
    "css_from_self_orthogonal",
]
