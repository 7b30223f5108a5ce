"""Colored partitions with primary and secondary colors.

Two families of colored partitions, the Bressoud-style machines phi and psi
that map between them, the bridge test for the image of phi, and tools for
counting, pattern search and drawing.
"""
from .colors import Color, color, primary, secondary
from .errors import InputError, InternalError
from .parts import Part, make_part, format_part, parse_part
from .machines import phi, psi, phi_trace, psi_trace
from .bridge import in_E1, index_split, bridge_report

__version__ = "0.1.0"

__all__ = [
    "Color", "color", "primary", "secondary", "InputError", "InternalError",
    "Part", "make_part", "format_part", "parse_part", "phi", "psi",
    "phi_trace", "psi_trace", "in_E1", "index_split", "bridge_report",
]
