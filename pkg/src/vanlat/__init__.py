"""Exact integer computations with lattices of thimbles.

The package works with the finite data a distinguished basis of thimbles
induces: integer pairing matrices, reflection and monodromy operators,
braid-group moves, the triangular lattice-to-dual operator, conjugation
actions built from critical-point descriptors, exact signatures, and the
signature formulas for the index of a gradient vector field at an
isolated complete intersection point.
"""

from .basis import (BasisChange, BraidMove, BraidWord, apply_braid_word,
                    braid_alpha, braid_alpha_inverse, monodromy,
                    orientation_flip, parse_braid_word, picard_lefschetz)
from .conjugation import (ConjugatePair, ConjugationData, MorseSpec,
                          RealPoint, SigmaTildeReport,
                          block_diagonal_structure_check, build_sigma,
                          derive_sigma_tilde, generate_consistent_instance,
                          signature_by_blocks, var_sigma_form)
from .index import (CycleData, EvenParityError, IcisInstance, LevelData,
                    sign_independence_check, gradient_index, morse_recursion_step,
                    poincare_hopf_check, radial_indices, smoothable_index,
                    telescoped_index, level_index_sum, cycle_index_sum)
from .intmat import IntMatrix, det, unimodular_inverse
from .lattice import (SignVector, ThimbleLattice, milnor_number,
                      self_intersection, validate_lattice)
from .oracle import float_signature, index_1d, index_2d, poly2
from .signature import Signature, exact_signature
from .variation import (check_monodromy_relation, check_s_relation,
                        intersection_operator, var, var_inverse,
                        var_inverse_as_operator_after_braid)

__version__ = "0.1.0"

__all__ = [
    "BasisChange", "BraidMove", "BraidWord", "ConjugatePair",
    "ConjugationData", "CycleData", "EvenParityError", "IcisInstance",
    "IntMatrix", "LevelData", "MorseSpec", "RealPoint", "Signature",
    "SigmaTildeReport", "SignVector", "ThimbleLattice", "apply_braid_word",
    "block_diagonal_structure_check", "braid_alpha", "braid_alpha_inverse",
    "build_sigma", "check_monodromy_relation", "check_s_relation",
    "sign_independence_check", "derive_sigma_tilde", "det", "exact_signature",
    "float_signature", "generate_consistent_instance", "index_1d",
    "index_2d", "gradient_index", "intersection_operator", "milnor_number",
    "monodromy", "morse_recursion_step", "orientation_flip",
    "parse_braid_word", "picard_lefschetz", "poincare_hopf_check", "poly2",
    "radial_indices", "self_intersection", "signature_by_blocks",
    "smoothable_index", "telescoped_index", "level_index_sum",
    "cycle_index_sum", "unimodular_inverse", "validate_lattice", "var",
    "var_inverse", "var_inverse_as_operator_after_braid", "var_sigma_form",
]
