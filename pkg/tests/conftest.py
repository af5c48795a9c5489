import random

import pytest

from tools.field import FieldContext, RationalFunctionT, parse_element


@pytest.fixture
def f2():
    return FieldContext(2, 1, 1)


@pytest.fixture
def f2r2():
    return FieldContext(2, 1, 2)


@pytest.fixture
def f3():
    return FieldContext(3, 1, 1)


@pytest.fixture
def f3r2():
    return FieldContext(3, 1, 2)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def el():
    """Parse an element: el(ctx, "l1^2 + 1")."""
    return parse_element


def random_poly(ctx, rng, height=2):
    """Random polynomial in l1..lr with exponents up to ``height``."""
    value = ctx.zero()
    for _ in range(rng.randint(1, 3)):
        term = ctx.const(rng.randrange(1, ctx.p))
        for i in range(1, ctx.r + 1):
            term = term * ctx.lam(i) ** rng.randint(0, height)
        value = value + term
    return value


def random_element(ctx, rng, height=2, nonzero=False):
    while True:
        num = random_poly(ctx, rng, height)
        den = random_poly(ctx, rng, height)
        if den.is_zero():
            continue
        value = num / den
        if nonzero and value.is_zero():
            continue
        return value


def random_rational(ctx, rng, degree=2, height=1):
    """Random element of K(T) with numerator and denominator of degree <= ``degree``."""
    while True:
        num = RationalFunctionT.polynomial(
            ctx, [random_poly(ctx, rng, height) for _ in range(rng.randint(1, degree + 1))])
        den = RationalFunctionT.polynomial(
            ctx, [random_poly(ctx, rng, height) for _ in range(rng.randint(1, degree + 1))])
        if not den.is_zero():
            return num / den


@pytest.fixture
def random_el():
    return random_element


@pytest.fixture
def random_rat():
    return random_rational
