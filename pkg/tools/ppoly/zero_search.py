"""
Zero Search Module

Bounded searches for nontrivial zeros of principal parts among elements
a/b with a and b polynomials of small degree in l1..lr. The exhaustive
search is the test oracle for ``certify_reduced``; the seeded random
search is the refuter used outside the certified fragment.
"""

import itertools
import logging
import random

logger = logging.getLogger(__name__)


def _monomials(ctx, height):
    exponents = [e for e in itertools.product(range(height + 1), repeat=ctx.r) if sum(e) <= height]
    values = []
    for e in exponents:
        value = ctx.one()
        for i, a in enumerate(e, start=1):
            if a:
                value = value * ctx.lam(i) ** a
        values.append(value)
    return values


def small_polynomials(ctx, height):
    """Every polynomial over F_p in l1..lr of total degree <= height."""
    monomials = _monomials(ctx, height)
    for coeffs in itertools.product(range(ctx.p), repeat=len(monomials)):
        value = ctx.zero()
        for c, m in zip(coeffs, monomials):
            if c:
                value = value + ctx.const(c) * m
        yield value


def small_elements(ctx, height):
    """
    Distinct values a/b with deg a, deg b <= height and b nonzero.

    Args:
        ctx (FieldContext): Field
        height (int): Degree bound

    Returns:
        list: Distinct KElements, zero first
    """
    numerators = list(small_polynomials(ctx, height))
    seen, values = set(), []
    for den in numerators:
        if den.is_zero():
            continue
        for num in numerators:
            value = num / den
            if value not in seen:
                seen.add(value)
                values.append(value)
    values.sort(key=lambda v: (not v.is_zero(), v.sort_key()))
    return values


def exhaustive_zero_search(P, height=1, limit=None):
    """
    First nontrivial zero of P with all coordinates in ``small_elements``.

    Args:
        P: PrincipalPart or PPolynomial
        height (int): Degree bound for numerators and denominators
        limit (int, optional): Maximum number of tuples to try

    Returns:
        dict | None: A zero by variable name, or None when none exists in range
    """
    variables = list(P.variables)
    values = small_elements(P.ctx, height)
    for tried, point in enumerate(itertools.product(values, repeat=len(variables))):
        if limit is not None and tried >= limit:
            break
        if all(x.is_zero() for x in point):
            continue
        candidate = dict(zip(variables, point))
        if P.evaluate(candidate).is_zero():
            logger.debug(f"Exhaustive search found a zero after {tried + 1} tuples")
            return candidate
    return None


def search_small_zero(P, height=2, samples=500, seed=0):
    """Seeded random search over ``small_elements``; returns a zero or None."""
    rng = random.Random(seed)
    variables = list(P.variables)
    values = small_elements(P.ctx, height)
    for _ in range(samples):
        point = [rng.choice(values) for _ in variables]
        if all(x.is_zero() for x in point):
            continue
        candidate = dict(zip(variables, point))
        if P.evaluate(candidate).is_zero():
            return candidate
    logger.debug(f"No zero among {samples} random tuples of height {height}")
    return None
