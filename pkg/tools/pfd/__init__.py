"""
PFD Package

Partial fraction decompositions over K(T) and for pointed maps into
commutative p-polynomial groups.
"""

from .decompose import (
    PoleSupport,
    PointedCurveMap,
    classical_pfd,
    group_pfd,
    pole_orders,
    compose,
    to_infinity,
    from_infinity
)

__all__ = [
    # Types
    'PoleSupport',
    'PointedCurveMap',

    # Decomposition
    'classical_pfd',
    'group_pfd',
    'pole_orders',

    # Base point
    'compose',
    'to_infinity',
    'from_infinity'
]
