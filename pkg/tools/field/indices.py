"""
Multi-Index Helpers

Index sets I_n = {0..p^n - 1}^r, lambda monomials and p-adic valuations.
"""

import itertools
from functools import lru_cache

from sympy import multiplicity
from sympy.ntheory.residue_ntheory import binomial_mod


@lru_cache(maxsize=None)
def index_set(p, n, r):
    """
    All multi-indices f with 0 <= f(i) < p^n, in lexicographic order.

    Args:
        p (int): Characteristic
        n (int): Level
        r (int): Number of p-basis generators

    Returns:
        tuple: Tuples of length r
    """
    return tuple(itertools.product(range(p ** n), repeat=r))


def unit_index(r, i=1, value=1):
    """The multi-index with ``value`` in slot i (1-based) and zeros elsewhere."""
    return tuple(value if j == i - 1 else 0 for j in range(r))


def is_zero_mod_p(f, p):
    return all(a % p == 0 for a in f)


def p_valuation(a, p):
    """Exact p-adic valuation of a nonzero integer."""
    return multiplicity(p, a)


def index_valuation(f, p):
    """min over nonzero slots of the p-adic valuation; None for the zero index."""
    values = [p_valuation(a, p) for a in f if a]
    return min(values) if values else None


def lam_power(ctx, f):
    """The element l^f = prod l_i^f(i) of ``ctx``."""
    value = ctx.one()
    for i, a in enumerate(f, start=1):
        if a:
            value = value * ctx.lam(i) ** a
    return value


def lucas_binomial(n, k, p):
    """binom(n, k) mod p by Lucas' rule."""
    if k < 0 or k > n:
        return 0
    return binomial_mod(n, k, p)
