"""Exact multiplets of equal-rank pairs, their character identities, and cubic Dirac operators."""

__version__ = "0.1.0"

from .errors import CapExceeded, MultipletkitError, NonRegularWeight, VerificationError
from .rootsystem import RootSystem, build_root_system, casimir_eigenvalue, dual_coxeter, parse_subalgebra, weyl_dimension
from .weyl import AffineWeight, affine_orbit, coset_reps, make_antidominant
from .characters import CharacterSeries, FiniteCharacter, affine_spin_character, weight_multiplicities, weyl_kac_character
from .multiplets import affine_multiplet, finite_multiplet, verify_affine_gkrs, verify_finite_gkrs
from .reps import LieAlgebra, build_irrep, lie_algebra
from .clifford import finite_spin_module, gamma_operator, superalgebra_checks
from .dirac_finite import assemble_dirac_finite, finite_dirac_report
from .dirac_loop import affine_dirac_trivial, build_fock, loop_casimir_check

__all__ = [
    "AffineWeight",
    "CapExceeded",
    "CharacterSeries",
    "FiniteCharacter",
    "LieAlgebra",
    "MultipletkitError",
    "NonRegularWeight",
    "RootSystem",
    "VerificationError",
    "affine_dirac_trivial",
    "affine_multiplet",
    "affine_orbit",
    "affine_spin_character",
    "assemble_dirac_finite",
    "build_fock",
    "build_irrep",
    "build_root_system",
    "casimir_eigenvalue",
    "coset_reps",
    "dual_coxeter",
    "finite_dirac_report",
    "finite_multiplet",
    "finite_spin_module",
    "gamma_operator",
    "lie_algebra",
    "loop_casimir_check",
    "make_antidominant",
    "parse_subalgebra",
    "superalgebra_checks",
    "verify_affine_gkrs",
    "verify_finite_gkrs",
    "weight_multiplicities",
    "weyl_dimension",
    "weyl_kac_character",
]
