import pytest

from tools.field import (
    FieldContext, RationalFunctionT, adjoin_artin_schreier, adjoin_radical, context_from_json,
    is_pth_power, parse_element, parse_rational, pbasis_expand, pth_root, reconstruct, substitute,
)
from tools.field.indices import index_valuation, lucas_binomial, p_valuation
from tools.utils.error_utils import (
    BadParams, ContextMismatch, ExpressionError, InseparableRadical, NotAPthPower, ZeroRadicand,
    ZeroScale,
)


# Frobenius and p-th roots

def test_frobenius_char2(f2):
    x = parse_element(f2, "l1 + 1")
    assert x.frobenius(1) == parse_element(f2, "l1^2 + 1")
    assert x.frobenius(0) == x


def test_frobenius_is_a_field_map(f3r2):
    x = parse_element(f3r2, "l1/l2")
    assert x.frobenius(1) == parse_element(f3r2, "l1^3/l2^3")


def test_pth_root_examples(f2, f2r2):
    assert pth_root(parse_element(f2, "l1^2")) == f2.lam(1)
    with pytest.raises(NotAPthPower):
        pth_root(f2.lam(1))
    x = parse_element(f2r2, "(l1 + l2)^2/l2^2")
    assert pth_root(x) == parse_element(f2r2, "(l1 + l2)/l2")


@pytest.mark.parametrize("seed", range(5))
def test_pth_root_inverts_frobenius(seed, f3r2, random_el):
    import random
    x = random_el(f3r2, random.Random(seed))
    assert pth_root(x.frobenius(1)) == x


# p-basis expansions

def test_expand_lambda(f2):
    expansion = pbasis_expand(f2.lam(1), 1)
    assert expansion.coefficients == {(1,): f2.one()}
    assert expansion.coefficient((0,)).is_zero()


def test_expand_inverse_of_lambda_plus_one(f2):
    x = parse_element(f2, "1/(l1 + 1)")
    expansion = pbasis_expand(x, 1)
    assert expansion.coefficient((0,)) == x
    assert expansion.coefficient((1,)) == x
    assert reconstruct(expansion) == x


def test_expand_product_r2(f2r2):
    expansion = pbasis_expand(parse_element(f2r2, "l1*l2"), 1)
    assert expansion.coefficients == {(1, 1): f2r2.one()}


@pytest.mark.parametrize("p,r,n", [(2, 1, 1), (2, 1, 2), (2, 2, 1), (3, 1, 1), (3, 2, 2)])
def test_expand_reconstructs(p, r, n, rng, random_el):
    ctx = FieldContext(p, 1, r)
    for _ in range(5):
        x = random_el(ctx, rng)
        assert reconstruct(pbasis_expand(x, n)) == x


def test_expand_is_linear_over_pn_powers(f3, rng, random_el):
    x = random_el(f3, rng)
    y = random_el(f3, rng, nonzero=True)
    left = pbasis_expand(x * y.frobenius(1), 1)
    right = pbasis_expand(x, 1)
    assert left.coefficients == {f: c * y for f, c in right.coefficients.items()}


def test_expand_rejects_level_zero(f2):
    with pytest.raises(ValueError):
        pbasis_expand(f2.lam(1), 0)


def test_expand_over_finite_constant_field():
    ctx = FieldContext(2, 2, 1)
    x = parse_element(ctx, "w*l1 + w^2/(l1 + w)")
    assert reconstruct(pbasis_expand(x, 1)) == x
    assert reconstruct(pbasis_expand(x, 2)) == x


# Adjunctions

def test_artin_schreier_existing_root(f2):
    c = parse_element(f2, "l1^2 + l1")
    ctx, root = adjoin_artin_schreier(f2, c)
    assert ctx is f2
    assert root == f2.lam(1)


def test_artin_schreier_zero(f2):
    ctx, root = adjoin_artin_schreier(f2, f2.zero())
    assert ctx is f2
    assert root.is_zero()


def test_artin_schreier_new_generator(f2):
    ctx, gamma = adjoin_artin_schreier(f2, f2.lam(1))
    assert len(ctx.adjunctions) == 1
    assert gamma ** 2 + gamma == ctx.lam(1)
    # the root now exists, so a second request reuses the tower
    again, root = adjoin_artin_schreier(ctx, ctx.lam(1))
    assert again is ctx
    assert root ** 2 - root == ctx.lam(1)


def test_artin_schreier_constant_extension(f2):
    ctx, gamma = adjoin_artin_schreier(f2, f2.one())
    assert gamma ** 2 + gamma == ctx.one()
    assert pbasis_expand(gamma * ctx.lam(1), 1).coefficient((1,)) == gamma ** 2


def test_radical_existing_root(f2):
    ctx, alpha = adjoin_radical(f2, parse_element(f2, "l1^3"), 3)
    assert ctx is f2
    assert alpha == f2.lam(1)


def test_radical_picks_canonical_root(f3):
    ctx, alpha = adjoin_radical(f3, f3.one(), 2)
    assert ctx is f3
    assert alpha == f3.one()


def test_radical_new_generator(f2):
    ctx, alpha = adjoin_radical(f2, f2.lam(1), 3)
    assert alpha ** 3 == ctx.lam(1)
    x = alpha * ctx.lam(1) + 1
    assert reconstruct(pbasis_expand(x, 1)) == x


def test_radical_errors(f2):
    with pytest.raises(InseparableRadical):
        adjoin_radical(f2, f2.lam(1), 4)
    with pytest.raises(ZeroRadicand):
        adjoin_radical(f2, f2.zero(), 3)


@pytest.mark.parametrize("fixture", ["f2", "f3"])
def test_radical_reuses_artin_schreier_generator(fixture, request):
    base = request.getfixturevalue(fixture)
    ctx, gamma = adjoin_artin_schreier(base, base.lam(1))
    ell = 3 if base.p == 2 else 2
    again, alpha = adjoin_radical(ctx, gamma ** ell, ell)
    assert again is ctx
    assert alpha == gamma
    x = alpha + ctx.lam(1)
    assert x * (1 / x) == ctx.one()


@pytest.mark.parametrize("fixture", ["f2", "f3"])
def test_artin_schreier_reuses_radical_generator(fixture, request):
    base = request.getfixturevalue(fixture)
    m = 3 if base.p == 2 else 2
    ctx, alpha = adjoin_radical(base, base.lam(1), m)
    c = alpha ** base.p - alpha
    again, root = adjoin_artin_schreier(ctx, c)
    assert again is ctx
    assert root == alpha
    x = root + ctx.lam(1)
    assert x * (1 / x) == ctx.one()


def test_artin_schreier_root_with_constant_part_over_radical(f2):
    ctx, alpha = adjoin_radical(f2, f2.lam(1), 3)
    gamma = alpha ** 2 + alpha * ctx.lam(1) + ctx.lam(1)
    again, root = adjoin_artin_schreier(ctx, gamma ** 2 - gamma)
    assert again is ctx
    assert root in (gamma, gamma + 1)


def test_contexts_do_not_mix(f2):
    ctx, gamma = adjoin_artin_schreier(f2, f2.lam(1))
    with pytest.raises(ContextMismatch):
        gamma + FieldContext(3).lam(1)
    assert ctx.lift(f2.lam(1)) + gamma == ctx.lam(1) + gamma


# K(T)

def test_substitute_examples(f2, f2r2):
    T = RationalFunctionT.t(f2)
    assert substitute(T, f2.one(), 0) == T
    G = parse_rational(f2, "1/(T^2 + l1)")
    assert substitute(G, f2.one(), 1) == parse_rational(f2, "1/(T^4 + l1)")
    H = parse_rational(f2r2, "l1*T")
    assert substitute(H, f2r2.lam(2), 1) == parse_rational(f2r2, "l1*l2*T^2")


def test_substitute_composes(f3, rng, random_rat, random_el):
    G = random_rat(f3, rng)
    a1 = random_el(f3, rng, nonzero=True)
    a2 = random_el(f3, rng, nonzero=True)
    twice = substitute(substitute(G, a2, 1), a1, 0)
    assert twice == substitute(G, a2 * a1 ** 3, 1)


def test_substitute_rejects_zero(f2):
    with pytest.raises(ZeroScale):
        substitute(RationalFunctionT.t(f2), f2.zero(), 1)


def test_rational_functions_are_reduced(f2):
    G = parse_rational(f2, "(T^2 + l1)/(T^2 + l1)")
    assert G == 1
    H = parse_rational(f2, "(T + 1)/(l1*T^2 + l1)")
    assert H.denominator()[-1] == f2.one()
    assert H == parse_rational(f2, "1/(l1*T + l1)")


def test_split_polynomial_part(f2):
    G = parse_rational(f2, "(T^3 + l1)/(T^2 + l1)")
    poly, proper = G.split_polynomial_part()
    assert poly == RationalFunctionT.t(f2)
    assert proper.is_proper()
    assert poly + proper == G


# Expressions

@pytest.mark.parametrize("text", ["(l1^2 + l1*l2)/(l2 + 1)", "l1^-1 + 2", "-(l1 - l2)^3", "0"])
def test_serialization_round_trip(f3r2, text):
    x = parse_element(f3r2, text)
    assert parse_element(f3r2, x.to_expr()) == x
    assert parse_element(f3r2, x.to_expr()).to_expr() == x.to_expr()


def test_round_trip_in_tower(f2):
    ctx, gamma = adjoin_artin_schreier(f2, f2.lam(1))
    x = gamma / (ctx.lam(1) + 1) + gamma ** 3
    assert parse_element(ctx, x.to_expr()) == x
    G = RationalFunctionT.constant(gamma) / parse_rational(ctx, "T^2 + l1")
    assert parse_rational(ctx, G.to_expr()) == G


def test_context_json_round_trip(f2):
    ctx, gamma = adjoin_artin_schreier(f2, f2.lam(1))
    ctx, alpha = adjoin_radical(ctx, gamma, 3)
    rebuilt = context_from_json(ctx.describe())
    assert rebuilt == ctx
    assert parse_element(rebuilt, alpha.to_expr()) == alpha


@pytest.mark.parametrize("text", ["l1 +", "l3", "l1 $ 2", "(l1", "1/0", "l1^x", "sin(l1)", "1.5", "", "l1^(1/2)"])
def test_bad_expressions(f2, text):
    with pytest.raises(ExpressionError):
        parse_element(f2, text)


@pytest.mark.parametrize("text, expected", [
    ("l1**2", "l1^2"),
    ("l1^(2*2)", "l1^4"),
    ("(l1 - 1)/(l1 - 1)", "1"),
    ("2/4 + l1", "1/2 + l1"),
])
def test_equivalent_spellings(f3, text, expected):
    assert parse_element(f3, text) == parse_element(f3, expected)


def test_sympy_constants_are_plain_names(f2):
    # E, I and pi resolve against the tower like any other name
    for text in ("E", "I", "pi + l1"):
        with pytest.raises(ExpressionError) as exc_info:
            parse_element(f2, text)
        assert 'unknown name' in str(exc_info.value)


def test_bad_field():
    with pytest.raises(BadParams):
        FieldContext(4)


def test_is_pth_power(f2):
    assert is_pth_power(parse_element(f2, "l1^4 + 1"))
    assert not is_pth_power(parse_element(f2, "l1^3"))


# Indices

def test_valuations_and_binomials():
    assert p_valuation(12, 2) == 2
    assert index_valuation((0, 4, 6), 2) == 1
    assert index_valuation((0, 0), 2) is None
    assert lucas_binomial(3, 1, 2) == 1
    assert lucas_binomial(4, 2, 2) == 0
    assert lucas_binomial(8, 3, 3) == 56 % 3
