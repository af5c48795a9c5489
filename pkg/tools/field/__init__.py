"""
Field Package

Exact arithmetic in F_q(l1, ..., lr), its separable constant towers and the
rational function field K(T), with the textual expression grammar.
"""

from .context import FieldContext, AdjunctionRecord
from .element import KElement
from .ratfunc import RationalFunctionT, substitute

from .pbasis import (
    PBasisExpansion,
    frobenius,
    pbasis_expand,
    reconstruct,
    pth_root,
    try_pth_root,
    is_pth_power
)

from .adjoin import (
    adjoin_artin_schreier,
    adjoin_radical,
    artin_schreier_root,
    nth_root
)

from .indices import (
    index_set,
    unit_index,
    lam_power,
    p_valuation,
    lucas_binomial
)

from .expression import (
    parse,
    evaluate,
    parse_element,
    parse_rational,
    parse_field,
    context_from_json
)

__all__ = [
    # Types
    'FieldContext',
    'AdjunctionRecord',
    'KElement',
    'RationalFunctionT',
    'PBasisExpansion',

    # Operations
    'frobenius',
    'pbasis_expand',
    'reconstruct',
    'pth_root',
    'try_pth_root',
    'is_pth_power',
    'adjoin_artin_schreier',
    'adjoin_radical',
    'artin_schreier_root',
    'nth_root',
    'substitute',

    # Indices
    'index_set',
    'unit_index',
    'lam_power',
    'p_valuation',
    'lucas_binomial',

    # Expressions
    'parse',
    'evaluate',
    'parse_element',
    'parse_rational',
    'parse_field',
    'context_from_json'
]
