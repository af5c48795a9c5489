"""
Identities Package

Relation rewriting over symbolic coordinate rings and the registered
identity claims with their verification reports.
"""

from .rewrite import Rule, RewriteSystem
from .claims import (
    CLAIMS,
    SELFTEST,
    Verdict,
    VerificationReport,
    run_claim,
    selftest,
    verify_largergp,
    verify_Ws_transform,
    certify_Nprime_nonsmooth,
    verify_Uprime_rewrites,
    verify_pairing_membership,
    verify_weil_gm,
    verify_phi_pullback,
    uprime_rewrite_system,
    pairing_rewrite_system
)

__all__ = [
    # Rewriting
    'Rule',
    'RewriteSystem',
    'uprime_rewrite_system',
    'pairing_rewrite_system',

    # Reports
    'CLAIMS',
    'SELFTEST',
    'Verdict',
    'VerificationReport',
    'run_claim',
    'selftest',

    # Claims
    'verify_largergp',
    'verify_Ws_transform',
    'certify_Nprime_nonsmooth',
    'verify_Uprime_rewrites',
    'verify_pairing_membership',
    'verify_weil_gm',
    'verify_phi_pullback'
]
