import random

import pytest

from tools.field import FieldContext, parse_element, parse_rational
from tools.ppoly import (
    Certified, PPolynomial, Term, Unknown, certify_reduced, certify_totally_nonsmooth,
    certify_wound_permawound, exhaustive_zero_search, forced_zero_variables, is_certified,
    parse_ppolynomial, principal_part, solve_principal,
)
from tools.utils.error_utils import ExpressionError, MalformedForm, UnsupportedFamily
from conftest import random_element


def pp(ctx, text):
    return principal_part(parse_ppolynomial(ctx, text))


# Parsing and principal parts

def test_principal_part_of_v(f2):
    P = pp(f2, "-X + X^2 + l1*X1^2")
    assert [(t.var, t.d) for t in P.terms] == [('X', 1), ('X1', 1)]
    assert P.term_of('X1').coeff == f2.lam(1)


def test_principal_part_of_vn(f2):
    P = pp(f2, "-X + X^2 + l1*X1^4 + l1^3*X3^4")
    assert [(t.var, t.d) for t in P.terms] == [('X', 1), ('X1', 2), ('X3', 2)]
    assert P.N == 2


def test_principal_part_of_linear_form(f2):
    P = pp(f2, "-X")
    assert P.terms == (Term(-f2.one(), 'X', 0),)


def test_principal_part_rejects_duplicates(f2):
    raw = PPolynomial(f2, ['X'], [Term(f2.one(), 'X', 1), Term(f2.lam(1), 'X', 1)])
    with pytest.raises(MalformedForm):
        principal_part(raw)
    with pytest.raises(MalformedForm):
        principal_part(PPolynomial(f2, ['X']))


def test_parser_merges_and_applies_frobenius(f2):
    F = parse_ppolynomial(f2, "(X1 + l1*X2)^2 + X1^2")
    assert F.terms == (Term(parse_element(f2, "l1^2"), 'X2', 1),)
    assert parse_ppolynomial(f2, F.to_expr(), F.variables) == F


@pytest.mark.parametrize("text", ["X1*X2", "X1^3", "X1 + 1", "1/X1"])
def test_parser_rejects_non_additive(f2, text):
    with pytest.raises(MalformedForm):
        parse_ppolynomial(f2, text)


def test_parser_unknown_name(f2):
    with pytest.raises(ExpressionError):
        parse_ppolynomial(f2, "Q1 + X1")


def test_parser_accepts_python_powers(f2):
    assert parse_ppolynomial(f2, "-X0 + X0**2 + l1*X1**2") == parse_ppolynomial(f2, "-X0 + X0^2 + l1*X1^2")
    with pytest.raises(ExpressionError):
        parse_ppolynomial(f2, "X0 + E")


def test_evaluate_at_rational_functions(f2):
    F = parse_ppolynomial(f2, "-X0 + X0^2 + l1*X1^2")
    value = F.evaluate({'X0': parse_rational(f2, "T"), 'X1': parse_rational(f2, "1/T")})
    assert value == parse_rational(f2, "T + T^2 + l1/T^2")


# Reducedness

def test_reduced_example(f2):
    assert is_certified(certify_reduced(pp(f2, "X^2 + l1*X1^2")))


def test_collision_gives_explicit_zero(f2):
    verdict = certify_reduced(pp(f2, "X1^2 + l1^2*X2^2"))
    assert isinstance(verdict, Certified) and not verdict.value
    assert verdict.zero == {'X1': f2.lam(1), 'X2': f2.one()}


def test_non_monomial_coefficient_is_unknown(f2):
    assert isinstance(certify_reduced(pp(f2, "X1^2 + (l1 + 1)*X2^2")), Unknown)


def test_linear_and_square_share_a_class(f2):
    P = pp(f2, "-X0 + X1^2")
    verdict = certify_reduced(P)
    assert is_certified(verdict, False)
    assert P.evaluate(verdict.zero).is_zero()
    assert any(not x.is_zero() for x in verdict.zero.values())


@pytest.mark.parametrize("seed", range(5))
def test_reducedness_invariant_under_pn_powers(seed, f3):
    rng = random.Random(seed)
    P = pp(f3, "X0^3 + l1*X1^3 + l1^2*X2^3")
    u = random_element(f3, rng, nonzero=True)
    scaled = PPolynomial(f3, P.variables,
                         [Term(t.coeff * u.frobenius(1), t.var, t.d) if t.var == 'X1' else t for t in P.terms])
    assert certify_reduced(principal_part(scaled)).value is True


def _monomial_form(ctx, rng):
    triples = []
    for var in ('X1', 'X2'):
        triples.append((ctx.lam(1) ** rng.randint(0, 3), var, rng.randint(0, 1)))
    return principal_part(PPolynomial.from_triples(ctx, ['X1', 'X2'], triples))


@pytest.mark.parametrize("seed", range(30))
def test_reducedness_agrees_with_exhaustive_search(seed, f2):
    P = _monomial_form(f2, random.Random(seed))
    verdict = certify_reduced(P)
    assert isinstance(verdict, Certified)
    if verdict.value:
        assert exhaustive_zero_search(P, height=1) is None
    else:
        assert P.evaluate(verdict.zero).is_zero()


def test_exhaustive_search_finds_planted_collision(f2):
    zero = exhaustive_zero_search(pp(f2, "X1^2 + l1^2*X2^2"), height=1)
    assert zero is not None


# Universality

def test_solve_full_family(f2):
    P = pp(f2, "X0^2 + l1*X1^2")
    assert solve_principal(P, f2.lam(1)) == {'X0': f2.zero(), 'X1': f2.one()}


def test_solve_fn_shape(f2):
    P = pp(f2, "X^2 + l1*X1^2")
    beta = parse_element(f2, "l1^3")
    assert solve_principal(P, beta) == {'X': f2.zero(), 'X1': f2.lam(1)}


def test_solve_zero(f3):
    P = pp(f3, "X0^3 + l1*X1^3 + l1^2*X2^3")
    assert all(x.is_zero() for x in solve_principal(P, f3.zero()).values())


@pytest.mark.parametrize("p,r,text", [
    (2, 1, "-X + X^2 + l1*X1^4 + l1^3*X3^4"),
    (3, 1, "-X0 + X0^3 + l1*X1^3 + l1^2*X2^3"),
    (2, 2, "X_0_0^2 + l1*X_1_0^2 + l2*X_0_1^2 + l1*l2*X_1_1^2"),
    (2, 1, "-X1 + X0^2 + l1*X1^2"),
])
def test_solve_principal_is_exact(p, r, text):
    ctx = FieldContext(p, 1, r)
    P = pp(ctx, text)
    rng = random.Random(p * 10 + r)
    for _ in range(20):
        beta = random_element(ctx, rng)
        assert P.evaluate(solve_principal(P, beta)) == beta


def test_solve_rejects_unsupported(f2):
    with pytest.raises(UnsupportedFamily):
        solve_principal(pp(f2, "X1^2 + l1^2*X2^2"), f2.one())


# Wound / permawound

def test_v_is_permawound(f2):
    report = certify_wound_permawound(parse_ppolynomial(f2, "-X0 + X0^2 + l1*X1^2"))
    assert report.smooth and report.wound and report.permawound
    assert report.family == 'full'
    assert is_certified(report.universal)


def test_non_reduced_report(f2):
    report = certify_wound_permawound(parse_ppolynomial(f2, "-X0 + X1^2"))
    assert report.smooth
    assert is_certified(report.reduced, False)
    assert not report.permawound


@pytest.mark.parametrize("p", [2, 3])
def test_weil_restriction_of_gm_is_permawound(p):
    ctx = FieldContext(p)
    text = f"-X{p - 1} + " + " + ".join(f"l1^{j}*X{j}^{p}" for j in range(p))
    report = certify_wound_permawound(parse_ppolynomial(ctx, text))
    assert report.permawound


@pytest.mark.parametrize("p, text", [
    (2, "X0^2 + l1*X1^2"),
    (2, "X0^4 + l1*X1^4 + l1^2*X2^4 + l1^3*X3^4"),
    (3, "X0^3 + l1*X1^3 + l1^2*X2^3"),
])
def test_homogeneous_nonsmooth_form_is_permawound(p, text):
    report = certify_wound_permawound(parse_ppolynomial(FieldContext(p), text))
    assert not report.smooth
    assert is_certified(report.reduced) and is_certified(report.universal)
    assert report.permawound
    assert report.to_json()['family'] == 'full'


def test_nonhomogeneous_nonsmooth_form_is_not_permawound(f2):
    report = certify_wound_permawound(parse_ppolynomial(f2, "X0^4 + l1*X1^4 + l1^2*X2^4 + l1^3*X3^4 + X1^2"))
    assert not report.smooth
    assert is_certified(report.reduced) and is_certified(report.universal)
    assert not report.permawound


def test_missing_class_is_not_universal(f2r2):
    report = certify_wound_permawound(parse_ppolynomial(f2r2, "-X0 + X0^2 + l2*X1^2 + l1*l2*X2^2"))
    assert report.wound
    assert is_certified(report.universal, False)
    assert not report.permawound


# Systems

def test_forced_zero_propagation(f2):
    system = [parse_ppolynomial(f2, "X0", ['X0', 'X1']),
              parse_ppolynomial(f2, "-X0 + X0^2 + l1*X1^2", ['X0', 'X1'])]
    assert forced_zero_variables(system) == ['X0', 'X1']
    assert is_certified(certify_totally_nonsmooth(system))


def test_artin_schreier_equation_is_not_forced(f2):
    system = [parse_ppolynomial(f2, "-X0 + X0^2")]
    assert forced_zero_variables(system) == []
    assert isinstance(certify_totally_nonsmooth(system), Unknown)
