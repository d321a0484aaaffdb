"""Constant-term representability of C-finite and hypergeometric
sequences: decision procedures, explicit witnesses, and prime congruence
sweeps over exact arithmetic.
"""

from ._kernel import kernel_name
from .cfinite import CFiniteSeq, CharRoots, TraceDecomposition
from .congruence import (CFiniteEvaluator, CongruenceReport, CTEvaluator,
                         HypergeomEvaluator, constant_c_falsifier,
                         ct_shift_check, gauss_check,
                         hypergeom_propagation_check, stability_check)
from .ctkit import (CTWitness, Decision, WitnessTerm, binomial_product_to_ct,
                    build_witness, check_minton_analog, decide_combination,
                    decide_single_ct, integral_roots_check, verify_witness)
from .exactnum import Rational, Residue, primes_in_range, rational_mod
from .hypergeom import (HypergeomSeq, christol_check, family_Am, family_B,
                        phi, predicted_Am_residue, residue_a,
                        rising_factorial, witness_Am)
from .laurent import LaurentPoly, ct_of_product, ct_sequence

__version__ = "0.1.0"

__all__ = [
    "CFiniteEvaluator", "CFiniteSeq", "CTEvaluator", "CTWitness",
    "CharRoots", "CongruenceReport", "Decision", "HypergeomEvaluator",
    "HypergeomSeq", "LaurentPoly", "Rational", "Residue",
    "TraceDecomposition", "WitnessTerm", "binomial_product_to_ct",
    "build_witness", "check_minton_analog", "christol_check",
    "constant_c_falsifier", "ct_of_product", "ct_sequence", "ct_shift_check",
    "decide_combination", "decide_single_ct", "family_Am", "family_B",
    "gauss_check", "hypergeom_propagation_check", "integral_roots_check",
    "kernel_name", "phi", "predicted_Am_residue", "primes_in_range",
    "rational_mod", "residue_a", "rising_factorial", "stability_check",
    "verify_witness", "witness_Am",
]
