"""Exact module theory over Z, Q and Z/n with checkable Orzech certificates."""
from .engine import (InjectivityCertificate, Reduction, VerificationResult, build_pullback, compute_V,
                     inverse_hom, invariance_chain, orzech_certify, reduce_to_fingen, verify_certificate)
from .linsolve import MembershipWitness, hnf, kernel_gens, membership, snf, solve
from .modules import (Hom, ModulePresentation, SubmoduleGens, elem_eq, hom_is_well_defined, is_surjective,
                      syzygies)
from .polymat import (Matrix, Polynomial, cayley_hamilton_check, charpoly, determinant, eval_poly_at_matrix,
                      identity, mat_add, mat_mul, monic_annihilator, scalar_mul)
from .rings import QQ, ZZ, Ring, RingElement, Zmod

__version__ = "0.1.0"

__all__ = [
    "InjectivityCertificate",
    "Reduction",
    "VerificationResult",
    "build_pullback",
    "compute_V",
    "inverse_hom",
    "invariance_chain",
    "orzech_certify",
    "reduce_to_fingen",
    "verify_certificate",
    "MembershipWitness",
    "hnf",
    "kernel_gens",
    "membership",
    "snf",
    "solve",
    "Hom",
    "ModulePresentation",
    "SubmoduleGens",
    "elem_eq",
    "hom_is_well_defined",
    "is_surjective",
    "syzygies",
    "Matrix",
    "Polynomial",
    "cayley_hamilton_check",
    "charpoly",
    "determinant",
    "eval_poly_at_matrix",
    "identity",
    "mat_add",
    "mat_mul",
    "monic_annihilator",
    "scalar_mul",
    "QQ",
    "ZZ",
    "Ring",
    "RingElement",
    "Zmod",
]
