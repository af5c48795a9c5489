"""
Groups Package

Preset presentations of explicit unipotent groups, their points, the
surjections phi_n and the multi-additive pairing into V_(n,l).
"""

from .presets import (
    PRESETS,
    GroupPresentation,
    GroupPoint,
    make_group,
    membership,
    random_point,
    verify_additivity,
    vn_indices,
    j_indices,
    ord_tail
)
from .phi import (
    phi_forms,
    apply_phi,
    kernel_equations,
    kernel_count,
    kernel_summary,
    verify_phi_homomorphism,
    verify_hom_chi_pullback
)
from .pairing import (
    PairingOutput,
    build_pairing,
    pair_points,
    pairing_multiadditivity,
    pairing_ring,
    slot_names,
    symbolic_inputs
)
from .symbolic import FieldAlgebra, SymbolicRing

__all__ = [
    # Presentations
    'PRESETS',
    'GroupPresentation',
    'GroupPoint',
    'make_group',
    'membership',
    'random_point',
    'verify_additivity',
    'vn_indices',
    'j_indices',
    'ord_tail',

    # Phi
    'phi_forms',
    'apply_phi',
    'kernel_equations',
    'kernel_count',
    'kernel_summary',
    'verify_phi_homomorphism',
    'verify_hom_chi_pullback',

    # Pairing
    'PairingOutput',
    'build_pairing',
    'pair_points',
    'pairing_multiadditivity',
    'pairing_ring',
    'slot_names',
    'symbolic_inputs',

    # Arithmetic
    'FieldAlgebra',
    'SymbolicRing'
]
