"""Groebner fans in monomial subalgebras and fans of higher Nash blowups of toric varieties."""
from .gfan import GroebnerCone, GroebnerFan, enumerate_fan, is_trivial
from .nash import NashResult, build_Jn, nash_fan, nobile_check
from .polyhedral import Cone, cone, dual_cone, hilbert_basis, is_smooth, orthant
from .semigroup import SemigroupPresentation
from .subalgebra import ReducedBasis, SubalgebraOrder, SubalgebraPoly, reduced_groebner_basis

__all__ = [
    "Cone", "GroebnerCone", "GroebnerFan", "NashResult", "ReducedBasis",
    "SemigroupPresentation", "SubalgebraOrder", "SubalgebraPoly", "build_Jn", "cone",
    "dual_cone", "enumerate_fan", "hilbert_basis", "is_smooth", "is_trivial", "nash_fan",
    "nobile_check", "orthant", "reduced_groebner_basis",
]
__version__ = "0.1.0"
