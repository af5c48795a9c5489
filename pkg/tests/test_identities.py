import pytest

from tools.field import FieldContext
from tools.groups import build_pairing, make_group, pairing_ring, symbolic_inputs
from tools.groups.symbolic import SymbolicRing
from tools.identities import (
    CLAIMS, RewriteSystem, Verdict, certify_Nprime_nonsmooth, pairing_rewrite_system, run_claim, selftest,
    uprime_rewrite_system, verify_largergp, verify_pairing_membership, verify_phi_pullback,
    verify_Uprime_rewrites, verify_weil_gm, verify_Ws_transform,
)
from tools.ppoly import parse_ppolynomial
from tools.utils.error_utils import BadParams, RewriteBudgetExceeded, RewriteError


@pytest.fixture
def ring2():
    return SymbolicRing(2, 1, ['X', 'Y'])


@pytest.fixture
def system2(ring2):
    X, Y, l = ring2.var('X'), ring2.var('Y'), ring2.lam(1)
    return RewriteSystem(ring2, [('X', 2, X + l * Y ** 2)])


# Rewriting

def test_single_rule_normal_form(ring2, system2):
    X, Y, l = ring2.var('X'), ring2.var('Y'), ring2.lam(1)
    assert system2.normal_form(X ** 2) == X + l * Y ** 2
    assert system2.normal_form(X ** 4) == X + l * Y ** 2 + l ** 2 * Y ** 4
    assert system2.normal_form(X ** 3) == X + l * Y ** 2 + l * X * Y ** 2
    assert system2.is_normal(system2.normal_form(X ** 7 * Y))


def test_normal_form_of_a_normal_element_is_itself(ring2, system2):
    x = ring2.var('X') * ring2.var('Y') ** 5 + ring2.lam(1)
    assert system2.normal_form(x) == x


def test_normal_form_is_linear(ring2, system2):
    X, Y = ring2.var('X'), ring2.var('Y')
    a, b = X ** 6 + Y, X ** 5 * Y ** 2
    assert system2.normal_form(a + b) == system2.normal_form(a) + system2.normal_form(b)


def test_budget(ring2, system2):
    with pytest.raises(RewriteBudgetExceeded):
        system2.normal_form(ring2.var('X') ** 8, budget=1)


def test_rule_validation(ring2, system2):
    X, Y = ring2.var('X'), ring2.var('Y')
    with pytest.raises(RewriteError):
        system2.add_rule('X', 2, Y)
    with pytest.raises(RewriteError):
        RewriteSystem(ring2, [('X', 3, Y)])
    with pytest.raises(RewriteError):
        RewriteSystem(ring2, [('X', 2, X ** 2 + Y)])
    # a second rule may not raise the relation degree of the first
    with pytest.raises(RewriteError):
        RewriteSystem(ring2, [('X', 2, Y ** 2), ('Y', 2, X)])


def test_rules_from_equations(f2):
    F = parse_ppolynomial(f2, "X + X^2 + l1*Y^4", ['X', 'Y'])
    R = SymbolicRing(2, 1, ['X', 'Y'])
    system = RewriteSystem.from_equations(R, [F], ['X'])
    X, Y, l = R.var('X'), R.var('Y'), R.lam(1)
    assert system.rules['X'].threshold == 2
    assert system.rules['X'].replacement == X + l * Y ** 4
    assert system.reduces_to_zero(R.evaluate(F, R.generic_point(['X', 'Y'])))


def test_rules_need_a_constant_leading_coefficient(f2):
    F = parse_ppolynomial(f2, "l1*X^2 + Y", ['X', 'Y'])
    with pytest.raises(RewriteError):
        RewriteSystem.from_equations(SymbolicRing(2, 1, ['X', 'Y']), [F], ['X'])


def test_pairing_identity_modulo_relations():
    R = pairing_ring(2, 1, 2)
    out = build_pairing(R, 1, symbolic_inputs(R, 1, 2))
    system = pairing_rewrite_system(R, FieldContext(2, 1, 2), 1, 2)
    l1, l2 = R.lam(1), R.lam(2)
    tail = l1 * out.Z_f[(1, 0)] ** 2 + l2 * out.Z_f[(0, 1)] ** 2 + l1 * l2 * out.Z_f[(1, 1)] ** 2
    assert system.reduces_to_zero(out.Z - out.Z ** 2 - tail)
    assert not system.reduces_to_zero(out.Z - out.Z ** 2)


def test_uprime_rules(f2r2):
    G = make_group('Uprime', f2r2, s=2)
    R = SymbolicRing(2, 2, G.coordinates)
    system = uprime_rewrite_system(R, G)
    assert len(system.rules) == 4
    assert all(rule.threshold == 2 for rule in system.rules.values())


# Claims

@pytest.mark.parametrize("n,p", [(2, 2), (3, 2), (2, 3)])
def test_largergp(n, p):
    assert verify_largergp(n, p).verdict is Verdict.VERIFIED


def test_largergp_two_lambdas():
    assert verify_largergp(2, 2, r=2).verified


def test_largergp_needs_two_levels():
    assert verify_largergp(1, 2).verdict is Verdict.SKIPPED


@pytest.mark.parametrize("s,p", [(1, 2), (2, 2), (2, 3)])
def test_ws_transform(s, p):
    assert verify_Ws_transform(s, p, 2).verdict is Verdict.VERIFIED


def test_ws_transform_needs_two_lambdas():
    assert verify_Ws_transform(1, 2, 1).verdict is Verdict.SKIPPED


@pytest.mark.parametrize("p,s", [(2, 1), (2, 2), (3, 2)])
def test_nprime_nonsmooth(p, s):
    report = certify_Nprime_nonsmooth(s, p, 2)
    assert report.verdict is Verdict.VERIFIED
    assert 'X0' in report.detail


def test_nprime_needs_two_lambdas():
    assert certify_Nprime_nonsmooth(1, 2, 1).verdict is Verdict.SKIPPED


@pytest.mark.parametrize("p,s,m", [(2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 1, 1), (3, 2, 1)])
def test_uprime_rewrites(p, s, m):
    assert verify_Uprime_rewrites(s, p, m).verdict is Verdict.VERIFIED


@pytest.mark.parametrize("n,p,r", [(1, 2, 2), (2, 2, 2), (1, 3, 2)])
def test_pairing_membership_by_rewriting(n, p, r):
    assert verify_pairing_membership(n, p, r).verdict is Verdict.VERIFIED


def test_pairing_membership_random_quick():
    report = verify_pairing_membership(1, 2, 2, mode='random', samples=3, seed=7)
    assert report.verified
    assert report.samples == 3
    assert report.to_json()['samples'] == 3


@pytest.mark.slow
def test_pairing_membership_random():
    report = verify_pairing_membership(1, 3, 2, mode='random', samples=50)
    assert report.verdict is Verdict.VERIFIED
    assert report.samples == 50


def test_pairing_membership_mode():
    with pytest.raises(BadParams):
        verify_pairing_membership(1, 2, 2, mode='guess')


@pytest.mark.parametrize("p", [2, 3])
def test_weil_gm(p):
    report = verify_weil_gm(p)
    assert report.verified
    assert report.detail.startswith('family')


@pytest.mark.parametrize("n,p,r", [(1, 2, 1), (2, 2, 1), (1, 2, 2), (1, 3, 1)])
def test_phi_pullback(n, p, r):
    assert verify_phi_pullback(n, p, r).verified


# Reports and registry

def test_report_schema():
    data = verify_largergp(2, 2).to_json()
    assert data['claim'] == 'largergp'
    assert data['params'] == {'n': 2, 'p': 2, 'r': 1}
    assert data['verdict'] == 'verified'
    assert isinstance(data['elapsed_ms'], int)
    assert 'witness' not in data


def test_skipped_report_keeps_reason():
    data = verify_largergp(1, 3).to_json()
    assert data['verdict'] == 'skipped'
    assert 'n >= 2' in data['detail']


def test_registry():
    assert set(CLAIMS) == {'largergp', 'Ws_transform', 'Nprime_nonsmooth', 'Uprime_rewrites',
                           'pairing_membership', 'weil_gm', 'phi_pullback'}
    assert run_claim('Nprime_nonsmooth', s=1, p=2, m=2).verified


def test_registry_errors():
    with pytest.raises(BadParams):
        run_claim('riemann')
    with pytest.raises(BadParams):
        run_claim('largergp', p=2)
    with pytest.raises(BadParams):
        run_claim('largergp', n=2, p=4)


def test_selftest():
    reports = selftest()
    assert reports and all(report.verified for report in reports)
