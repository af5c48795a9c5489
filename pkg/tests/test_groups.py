import random

import pytest

from tools.field import FieldContext
from tools.groups import (
    GroupPoint, apply_phi, build_pairing, kernel_count, kernel_equations, make_group, membership,
    pair_points, pairing_multiadditivity, pairing_ring, random_point, symbolic_inputs,
    verify_additivity, verify_hom_chi_pullback, verify_phi_homomorphism,
)
from tools.groups.symbolic import FieldAlgebra
from tools.ppoly import certify_totally_nonsmooth, is_certified, parse_ppolynomial
from tools.utils.error_utils import ArityMismatch, BadParams, NotAMember


def equation(G, text):
    return parse_ppolynomial(G.ctx, text, G.coordinates)


# Presets

def test_v_preset(f2):
    G = make_group('V', f2)
    assert G.coordinates == ('X0', 'X1')
    assert G.equations == (equation(G, "-X0 + X0^2 + l1*X1^2"),)


def test_vn_preset(f2):
    G = make_group('Vn', f2, n=2)
    assert G.coordinates == ('X', 'X1', 'X3')
    assert G.equations == (equation(G, "-X + X^2 + l1*X1^4 + l1^3*X3^4"),)


def test_weil_alphap_preset(f2):
    G = make_group('weil_alphap', f2)
    assert G.equations == (equation(G, "X0^2 + l1*X1^2"),)


def test_weil_gm_preset(f3):
    G = make_group('weil_gm', f3)
    assert G.equations == (equation(G, "-X2 + X0^3 + l1*X1^3 + l1^2*X2^3"),)


def test_ws_preset(f2r2):
    G = make_group('Ws', f2r2, s=1)
    assert G.coordinates == ('X0', 'X_0_1', 'X_1_1')
    assert G.equations == (equation(G, "-X0 + X0^2 + l2*X_0_1^2 + l1*l2*X_1_1^2"),)


def test_uprime_preset(f2):
    G = make_group('Uprime', f2, s=2)
    assert G.coordinates == ('X0', 'X1', 'X2', 'X3')
    assert list(G.equations) == [
        equation(G, "-X0 + X0^2 + l1*X2^2"),
        equation(G, "-X2 + X1^2 + l1*X3^2"),
    ]


def test_uprime_level_one_is_v(f3):
    assert make_group('Uprime', f3, s=1).equations == make_group('V', f3).equations


def test_nprime_is_totally_nonsmooth(f2r2):
    G = make_group('Nprime', f2r2, s=2)
    assert len(G.equations) == 2
    assert is_certified(certify_totally_nonsmooth(list(G.equations)))


@pytest.mark.parametrize("preset,params", [
    ('nope', {}),
    ('Vn', {}),
    ('Vn', {'n': 0}),
    ('Ws', {'s': 1}),
    ('Uprime', {'s': 'x'}),
    ('Vn', {'n': 1, 'lam_index': 2}),
])
def test_bad_params(preset, params, f2):
    with pytest.raises(BadParams):
        make_group(preset, f2, **params)


@pytest.mark.parametrize("preset,ctx,params", [
    ('V', FieldContext(2), {}),
    ('Vn', FieldContext(3), {'n': 2}),
    ('Ws', FieldContext(2, 1, 2), {'s': 2}),
    ('Uprime', FieldContext(2), {'s': 2}),
    ('Nprime', FieldContext(2, 1, 2), {'s': 2}),
    ('weil_alphap', FieldContext(3), {}),
    ('weil_gm', FieldContext(3), {}),
])
def test_presets_are_additive(preset, ctx, params):
    assert verify_additivity(make_group(preset, ctx, **params))


# Membership and points

def test_membership_examples(f2):
    G = make_group('V', f2)
    assert membership(G, [f2.zero(), f2.zero()])
    assert membership(G, [f2.one(), f2.zero()])
    assert not membership(G, [f2.lam(1), f2.zero()])


def test_membership_arity(f2):
    G = make_group('V', f2)
    with pytest.raises(ArityMismatch):
        membership(G, [f2.zero()])
    with pytest.raises(ArityMismatch):
        membership(G, {'X0': f2.zero(), 'Q': f2.zero()})


def test_group_point_rejects_non_members(f2):
    with pytest.raises(NotAMember):
        GroupPoint(make_group('V', f2), [f2.lam(1), f2.zero()])


def _two_points(G, rng):
    first = random_point(G, rng)
    second = random_point(first.group, rng)
    ctx = second.group.ctx
    first = GroupPoint(second.group, {k: ctx.lift(v) for k, v in first.values.items()})
    return first, second


@pytest.mark.parametrize("seed", range(10))
def test_random_point_sums_are_members(seed):
    G = make_group('Vn', FieldContext(2), n=2)
    a, b = _two_points(G, random.Random(seed))
    assert membership(a.group, (a + b).values)


# Phi

def test_phi_of_zero(f2):
    source = make_group('Vn', f2, n=2)
    image = apply_phi(1, f2, [f2.zero()] * len(source.coordinates))
    assert all(v.is_zero() for v in image.values.values())


def test_phi_example(f2):
    image = apply_phi(1, f2, [f2.one(), f2.zero(), f2.zero()])
    assert image.values == {'X': f2.one(), 'X1': f2.zero()}


def test_phi_rejects_non_members(f2):
    with pytest.raises(NotAMember):
        apply_phi(1, f2, [f2.lam(1), f2.zero(), f2.zero()])


@pytest.mark.parametrize("seed", range(5))
def test_phi_of_random_point(seed):
    point = random_point(make_group('Vn', FieldContext(2), n=2), random.Random(seed))
    image = apply_phi(1, point.group.ctx, point)
    assert image.values['X'] == point.values['X']


@pytest.mark.parametrize("n,p", [(1, 2), (1, 3), (2, 2)])
def test_chi_pullback(n, p):
    assert verify_hom_chi_pullback(n, p)


@pytest.mark.parametrize("p,n,r", [(2, 1, 1), (3, 1, 1), (2, 1, 2), (2, 2, 1)])
def test_phi_is_a_homomorphism(p, n, r):
    assert verify_phi_homomorphism(p, n, r)


@pytest.mark.parametrize("p,n,r", [(2, 1, 1), (2, 1, 2), (3, 1, 1), (2, 2, 1), (3, 2, 1)])
def test_kernel_count(p, n, r):
    assert len(kernel_equations(FieldContext(p, 1, r), n)) - 1 == kernel_count(p, n, r)


def test_kernel_equation_is_weil_alpha_p(f2):
    source = make_group('Vn', f2, n=2)
    assert kernel_equations(f2, 1)[1] == equation(source, "X1^2 + l1*X3^2")


# Pairing

def test_pairing_symbolic_example():
    R = pairing_ring(2, 1, 2)
    out = build_pairing(R, 1, symbolic_inputs(R, 1, 2))
    x = R.var
    assert out.Z == x('X1') * x('X2')
    assert out.Z_f[(1, 0)] == x('X1_1') * x('X2')
    assert out.Z_f[(0, 1)] == x('X1') * x('X2_1')
    assert out.Z_f[(1, 1)] == x('X1_1') * x('X2_1')


def test_pairing_membership_identity_by_expansion():
    R = pairing_ring(2, 1, 2)
    out = build_pairing(R, 1, symbolic_inputs(R, 1, 2))
    l1, l2 = R.lam(1), R.lam(2)
    lhs = l1 * out.Z_f[(1, 0)] ** 2 + l2 * out.Z_f[(0, 1)] ** 2 + l1 * l2 * out.Z_f[(1, 1)] ** 2
    X1, X2, Y1, Y2 = R.var('X1'), R.var('X2'), R.var('X1_1'), R.var('X2_1')
    assert lhs == l1 * Y1 ** 2 * X2 ** 2 + l2 * X1 ** 2 * Y2 ** 2 + l1 * l2 * Y1 ** 2 * Y2 ** 2
    # X_i^2 = X_i + l_i X_(i,1)^2 on V_(1, l_i)
    square1, square2 = X1 + l1 * Y1 ** 2, X2 + l2 * Y2 ** 2
    reduced = l1 * Y1 ** 2 * square2 + l2 * square1 * Y2 ** 2 + l1 * l2 * Y1 ** 2 * Y2 ** 2
    assert reduced == out.Z - square1 * square2


def test_pairing_of_zero_inputs(f2r2):
    inputs = [{'X1': f2r2.zero(), 'X1_1': f2r2.zero()}, {'X2': f2r2.zero(), 'X2_1': f2r2.zero()}]
    out = build_pairing(FieldAlgebra(f2r2), 1, inputs)
    assert out.Z.is_zero() and all(z.is_zero() for z in out.Z_f.values())


@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("n", [1, 2])
def test_pairing_of_points_is_a_member(seed, n, f2r2):
    rng = random.Random(seed)
    first = random_point(make_group('Vn', f2r2, n=n, lam_index=1), rng)
    second = random_point(make_group('Vn', first.group.ctx, n=n, lam_index=2), rng)
    ctx = second.group.ctx
    first = {k: ctx.lift(v) for k, v in first.values.items()}
    point = pair_points(ctx, n, [first, second])
    assert membership(point.group, point.values)


@pytest.mark.parametrize("p,n,r", [(2, 1, 2), (2, 2, 2), (3, 1, 2), (2, 1, 3)])
def test_pairing_is_multiadditive(p, n, r):
    assert pairing_multiadditivity(p, n, r)
