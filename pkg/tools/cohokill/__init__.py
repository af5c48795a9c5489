"""
Cohokill Package

Witnesses that rational functions lie in the image of
F(X) = -X_0 + sum_f l^f X_f^p after a substitution T -> alpha * T^(p^d),
their composition over S-terms and their serialized replay.
"""

from .witness import (
    TARGETS,
    Frame,
    WitnessCertificate,
    verify_witness,
    zero_certificate,
    substitute_certificate,
    add_certificates,
    witness_simple_pole,
    witness_monomial_ppower,
    witness_frobenius_diff,
    witness_pole_term
)
from .kill import (
    MonomialTerm,
    PoleTerm,
    CongruenceAccumulator,
    kill_monomial,
    kill_pole_term,
    kill_class,
    s_terms,
    replay_certificate
)

__all__ = [
    # Certificates
    'TARGETS',
    'Frame',
    'WitnessCertificate',
    'verify_witness',
    'zero_certificate',
    'substitute_certificate',
    'add_certificates',

    # Witnesses
    'witness_simple_pole',
    'witness_monomial_ppower',
    'witness_frobenius_diff',
    'witness_pole_term',

    # Killing
    'MonomialTerm',
    'PoleTerm',
    'CongruenceAccumulator',
    'kill_monomial',
    'kill_pole_term',
    'kill_class',
    's_terms',
    'replay_certificate'
]
