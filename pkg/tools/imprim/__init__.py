"""
Imprim Package

Degree of imprimitivity, p-independence and generating subsets for purely
inseparable extensions and reduced algebras over K.
"""

from .imprimitivity import (
    PureInsepExtension,
    AlgebraDescriptor,
    FrobeniusSpan,
    degree,
    log_degree,
    is_p_independent,
    imp,
    imp_algebra,
    min_generating_subset,
    adjunction_answers
)

__all__ = [
    # Types
    'PureInsepExtension',
    'AlgebraDescriptor',
    'FrobeniusSpan',

    # Operations
    'degree',
    'log_degree',
    'is_p_independent',
    'imp',
    'imp_algebra',
    'min_generating_subset',
    'adjunction_answers'
]
