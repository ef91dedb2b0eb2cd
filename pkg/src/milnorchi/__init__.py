"""Milnor-fiber Euler characters of complex reflection groups.

``chi_character`` returns the virtual character sum of a_d I_d for an
irreducible reflection group given as ``Infinite(r, p, l)`` or
``Exceptional(n)``. The ``oracle`` subpackage checks the infinite family
by brute force.
"""

from .euler import chi_character, c_classifier, closed_form_infinite, coefficients, quotient_euler
from .groups import DegreeProfile, Exceptional, Infinite, degree_profile, parse_group

__all__ = [
    "DegreeProfile",
    "Exceptional",
    "Infinite",
    "c_classifier",
    "chi_character",
    "closed_form_infinite",
    "coefficients",
    "degree_profile",
    "parse_group",
    "quotient_euler",
]
