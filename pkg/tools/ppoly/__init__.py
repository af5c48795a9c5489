"""
PPoly Package

p-polynomial forms, principal parts, reducedness and universality
certificates, wound/permawound reports and bounded zero searches.
"""

from .forms import (
    Term,
    PPolynomial,
    PrincipalPart,
    LinearForm,
    principal_part,
    parse_ppolynomial,
    frobenius_of,
    natural_key
)
from .certify import (
    Certified,
    Unknown,
    ClassMap,
    WoundReport,
    class_map,
    certify_reduced,
    certify_universal,
    certify_wound_permawound,
    family_name,
    is_certified,
    solve_principal
)
from .systems import forced_zero_variables, certify_totally_nonsmooth
from .zero_search import exhaustive_zero_search, search_small_zero, small_elements

__all__ = [
    # Types
    'Term',
    'PPolynomial',
    'PrincipalPart',
    'LinearForm',
    'Certified',
    'Unknown',
    'ClassMap',
    'WoundReport',

    # Forms
    'principal_part',
    'parse_ppolynomial',
    'frobenius_of',
    'natural_key',

    # Certificates
    'class_map',
    'certify_reduced',
    'certify_universal',
    'certify_wound_permawound',
    'family_name',
    'is_certified',
    'solve_principal',
    'forced_zero_variables',
    'certify_totally_nonsmooth',

    # Search
    'exhaustive_zero_search',
    'search_small_zero',
    'small_elements'
]
