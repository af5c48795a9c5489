"""
Identity Claims Module

Symbolic checks of the equations behind the permawound groups: the
containment of V_(n,l) in a larger Artin-Schreier group, the change of
variables on W_s and the subgroup N', the rewriting consequences of the
U' equations, membership of the pairing in V_(n,l), the Weil restriction
of G_m and the pull-back along phi_n. Each check returns a
VerificationReport and is registered in CLAIMS under its claim id.
"""

import inspect
import logging
import random
from dataclasses import dataclass
from enum import Enum
from functools import wraps

from tools.field.context import FieldContext
from tools.field.indices import index_set, is_zero_mod_p
from tools.groups.pairing import build_pairing, pairing_multiadditivity, pairing_ring, slot_names, slot_values, \
    symbolic_inputs
from tools.groups.phi import phi_forms, verify_hom_chi_pullback, verify_phi_homomorphism
from tools.groups.presets import j_indices, make_group, membership, nprime_correction, ord_tail, random_point, \
    vn_indices
from tools.groups.symbolic import FieldAlgebra, SymbolicRing
from tools.identities.rewrite import RewriteSystem
from tools.ppoly.certify import certify_wound_permawound, is_certified
from tools.ppoly.systems import certify_totally_nonsmooth
from tools.utils.date_utils import timed
from tools.utils.error_utils import BadParams
from tools.utils.format_utils import coordinate_name, format_multi_index, truncate_string

logger = logging.getLogger(__name__)


class Verdict(Enum):
    VERIFIED = 'verified'
    REFUTED = 'refuted'
    UNKNOWN = 'unknown'
    SKIPPED = 'skipped'


@dataclass
class Outcome:
    verdict: Verdict
    witness: object = None
    detail: str = ''
    samples: int = None


def verified(detail=''):
    return Outcome(Verdict.VERIFIED, detail=detail)


def refuted(witness, detail=''):
    return Outcome(Verdict.REFUTED, witness=witness, detail=detail)


def skipped(reason):
    return Outcome(Verdict.SKIPPED, detail=reason)


def unknown(reason):
    return Outcome(Verdict.UNKNOWN, detail=reason)


@dataclass
class VerificationReport:
    """
    Result of one claim check.

    Attributes:
        claim (str): Claim id
        params (dict): Parameters the check ran with
        verdict (Verdict): Outcome
        witness: Counterexample of a refuted claim (text or JSON-ready dict)
        detail (str): Reason for skipped and unknown verdicts, notes otherwise
        elapsed_ms (int): Wall-clock time of the check
        samples (int): Number of sampled points in random mode
    """

    claim: str
    params: dict
    verdict: Verdict
    witness: object = None
    detail: str = ''
    elapsed_ms: int = 0
    samples: int = None

    @property
    def verified(self):
        return self.verdict is Verdict.VERIFIED

    def to_json(self):
        data = {
            'claim': self.claim,
            'params': dict(self.params),
            'verdict': self.verdict.value,
            'elapsed_ms': self.elapsed_ms,
        }
        if self.witness is not None:
            data['witness'] = self.witness
        if self.detail:
            data['detail'] = self.detail
        if self.samples is not None:
            data['samples'] = self.samples
        return data


CLAIMS = {}


def claim(name):
    """
    Register a check under ``name`` and wrap its Outcome into a timed report.

    Args:
        name (str): Claim id used by the command line and manifests

    Returns:
        function: Decorator
    """
    def decorator(func):
        signature = inspect.signature(func)

        @wraps(func)
        def wrapper(*args, **kwargs):
            try:
                bound = signature.bind(*args, **kwargs)
            except TypeError as ex:
                raise BadParams(f"claim {name}: {ex}", hint=f"parameters: {', '.join(signature.parameters)}") from ex
            bound.apply_defaults()
            params = dict(bound.arguments)
            with timed(f"claim {name}") as watch:
                outcome = func(*bound.args, **bound.kwargs)
            report = VerificationReport(name, params, outcome.verdict, outcome.witness, outcome.detail,
                                        watch.elapsed_ms, outcome.samples)
            if outcome.verdict is Verdict.VERIFIED:
                logger.info(f"{name} {params}: verified in {report.elapsed_ms} ms")
            else:
                logger.warning(f"{name} {params}: {outcome.verdict.value} {outcome.detail}")
            return report

        CLAIMS[name] = wrapper
        return wrapper
    return decorator


def run_claim(name, **params):
    """
    Run a registered claim by id.

    Raises:
        BadParams: For unknown claim ids or parameters
    """
    if name not in CLAIMS:
        raise BadParams(f"unknown claim {name!r}", hint=f"claims: {', '.join(sorted(CLAIMS))}")
    return CLAIMS[name](**params)


def _residue(x):
    return truncate_string(str(x), 400)


@claim('largergp')
def verify_largergp(n, p, r=1):
    """
    V_(n,l) lies in X = X^(p^(n-1)) + sum_{j=0}^{n-2} S^(p^j), with
    S = sum_f l^f X_f^(p^n) the tail of the V_(n,l) equation.

    Unfolds X = X^p + S n-1 times and compares with the target exactly, then
    confirms the difference has normal form 0 under X^p -> X - S.
    """
    if n < 2:
        return skipped("the containment needs n >= 2")
    ctx = FieldContext(p, 1, r)
    G = make_group('Vn', ctx, n=n)
    R = SymbolicRing(p, r, G.coordinates)
    X = R.var('X')
    S = R.zero()
    for f in vn_indices(p, n, r):
        S += R.lam_power(f) * R.frobenius(R.var(coordinate_name('X', f)), n)

    unfolded = X
    for _ in range(n - 1):
        unfolded = unfolded.compose(X, R.frobenius(X) + S)
    target = R.frobenius(X, n - 1)
    for j in range(n - 1):
        target += R.frobenius(S, j)
    if unfolded != target:
        return refuted(_residue(unfolded - target), "unfolding differs from the target form")

    system = RewriteSystem.from_equations(R, G.equations, ['X'])
    residue = system.normal_form(X - target)
    if residue:
        return refuted(_residue(residue), "target is not a consequence of the relation")
    return verified(f"{n - 1} unfolding steps")


@claim('Ws_transform')
def verify_Ws_transform(s, p, r=2):
    """
    Over K(l1^(1/p^s)), Y0 = X0 + C with
    C = sum_{f in J_s} sum_{d=1}^{ord(f')} l^(f/p^d) X_f^(p^(s-d))
    turns the W_s equation into
    -Y0 + Y0^p + sum_f l^(f/p^ord(f')) X_f^(p^(s-ord(f'))),
    and Y0^(p^(s-1)) is the N' correction form, whose coefficients lie in K.
    """
    if r < 2:
        return skipped("W_s needs at least two p-basis elements")
    ctx = FieldContext(p, 1, r)
    G = make_group('Ws', ctx, s=s)
    R = SymbolicRing(p, r, G.coordinates + ('Y0',), root_level=s)
    point = R.generic_point(G.coordinates)
    Y0 = R.var('Y0')

    correction, target = R.zero(), -Y0 + R.frobenius(Y0)
    for f in j_indices(p, s, r):
        X_f = point[coordinate_name('X', f)]
        order = ord_tail(f, p)
        for d in range(1, order + 1):
            correction += R.lam_power(f, divide=d) * R.frobenius(X_f, s - d)
        target += R.lam_power(f, divide=order) * R.frobenius(X_f, s - order)

    transformed = R.evaluate(G.equations[0], dict(point, X0=Y0 - correction))
    if transformed != target:
        return refuted(_residue(transformed - target), "W_s equation after the change of variables")

    raised = R.frobenius(point['X0'] + correction, s - 1)
    scale = p ** s
    if any(e % scale for monom in raised.monoms() for e in monom[:r]):
        return refuted(_residue(raised), "raised correction has lambda exponents outside K")
    if raised != R.evaluate(nprime_correction(ctx, s), point):
        return refuted(_residue(raised - R.evaluate(nprime_correction(ctx, s), point)),
                       "raised correction differs from the N' equation")
    return verified(f"{len(j_indices(p, s, r))} coordinates X_f")


@claim('Nprime_nonsmooth')
def certify_Nprime_nonsmooth(s, p, m=2):
    """N' has no nonzero point over K_s: every coordinate is forced to 0."""
    if m < 2:
        return skipped("N' needs at least two p-basis elements")
    G = make_group('Nprime', FieldContext(p, 1, m), s=s)
    verdict = certify_totally_nonsmooth(list(G.equations))
    if is_certified(verdict):
        return verified(verdict.detail)
    return unknown(verdict.reason)


def uprime_rewrite_system(R, G):
    """X_h^p -> X_(ph) - sum_{g = h mod p^(s-1), g != h} l^((g-h)/p^(s-1)) X_g^p for h in I_(s-1)."""
    s, m = G.params['s'], G.ctx.r
    solved = [coordinate_name('X', h) for h in index_set(G.ctx.p, s - 1, m)]
    return RewriteSystem.from_equations(R, G.equations, solved)


@claim('Uprime_rewrites')
def verify_Uprime_rewrites(s, p, m=1):
    """
    From the U' equations, read as rewrite rules, derive for 0 <= d <= s and h in I_(s-d)

        X_(p^d h) = sum_{g in I_s, g = h mod p^(s-d)} l^((g-h)/p^(s-d)) X_g^(p^d)

    and X_0 = X_0^p + sum_{g in I_s, p does not divide g} l^g X_g^(p^s).
    """
    ctx = FieldContext(p, 1, m)
    G = make_group('Uprime', ctx, s=s)
    R = SymbolicRing(p, m, G.coordinates)
    system = uprime_rewrite_system(R, G)

    def X(g):
        return R.var(coordinate_name('X', g))

    checked = 0
    for d in range(s + 1):
        step = p ** (s - d)
        for h in index_set(p, s - d, m):
            difference = X(tuple(p ** d * a for a in h))
            for g in index_set(p, s, m):
                if all((a - b) % step == 0 for a, b in zip(g, h)):
                    shift = tuple((a - b) // step for a, b in zip(g, h))
                    difference -= R.lam_power(shift) * R.frobenius(X(g), d)
            residue = system.normal_form(difference)
            if residue:
                return refuted({'d': d, 'h': format_multi_index(h), 'normal_form': _residue(residue)},
                               "U' rewrite consequence fails")
            checked += 1

    zero = (0,) * m
    difference = X(zero) - R.frobenius(X(zero))
    for g in index_set(p, s, m):
        if not is_zero_mod_p(g, p):
            difference -= R.lam_power(g) * R.frobenius(X(g), s)
    residue = system.normal_form(difference)
    if residue:
        return refuted({'equation': 'image', 'normal_form': _residue(residue)}, "image equation fails")
    return verified(f"{checked} rewrite consequences and the image equation")


def pairing_rewrite_system(R, ctx, n, r):
    """X{i}^p -> X{i} - sum_ell l_i^ell X{i}_ell^(p^n) for every slot i."""
    system = RewriteSystem(R)
    for i in range(1, r + 1):
        slot = make_group('Vn', ctx, n=n, lam_index=i)
        values = dict(zip(slot.coordinates, (R.var(name) for name in slot_names(i, ctx.p, n))))
        system.add_equation(slot.equations[0], 'X', values, var=f"X{i}")
    return system


def _random_pairing_sample(ctx, n, rng):
    points, current = [], ctx
    for i in range(1, ctx.r + 1):
        point = random_point(make_group('Vn', current, n=n, lam_index=i), rng)
        points.append(point)
        current = point.group.ctx
    inputs = [slot_values(i, ctx.p, n, {k: current.lift(v) for k, v in point.values.items()})
              for i, point in enumerate(points, start=1)]
    out = build_pairing(FieldAlgebra(current), n, inputs)
    return inputs, membership(make_group('Vn', current, n=n), out.as_values())


@claim('pairing_membership')
def verify_pairing_membership(n, p, r=2, mode='rewrite', samples=50, seed=0):
    """
    The pairing of points of V_(n,l_i) lies in V_(n,l).

    rewrite mode reduces F_(n,l)(b(X)) modulo the slot relations and
    expects 0; random mode pairs ``samples`` random points over
    Artin-Schreier extensions and tests membership exactly.
    """
    if mode not in ('rewrite', 'random'):
        raise BadParams(f"unknown mode {mode!r}", hint="modes: rewrite, random")
    ctx = FieldContext(p, 1, r)
    if mode == 'random':
        rng = random.Random(seed)
        for k in range(samples):
            inputs, member = _random_pairing_sample(ctx, n, rng)
            if not member:
                witness = {name: value.to_expr() for slot in inputs for name, value in slot.items()}
                outcome = refuted(witness, f"sample {k} is not in V_{n}")
                outcome.samples = k + 1
                return outcome
        outcome = verified(f"seed {seed}")
        outcome.samples = samples
        return outcome

    if not pairing_multiadditivity(p, n, r):
        return refuted("pairing is not multi-additive", "multi-additivity gate")
    R = pairing_ring(p, n, r)
    out = build_pairing(R, n, symbolic_inputs(R, n, r))
    value = R.evaluate(make_group('Vn', ctx, n=n).equations[0], out.as_values())
    residue = pairing_rewrite_system(R, ctx, n, r).normal_form(value)
    if residue:
        return refuted(_residue(residue), "F_n of the pairing does not reduce to 0")
    return verified(f"{len(out.Z_f)} coordinates Z_f")


@claim('weil_gm')
def verify_weil_gm(p):
    """
    The Weil restriction equation X_(p-1) = sum_j l^j X_j^p becomes l times
    the V equation under X0 = l X_(p-1), X_j = X_(j-1), and is certified
    permawound.
    """
    ctx = FieldContext(p, 1, 1)
    G, V = make_group('weil_gm', ctx), make_group('V', ctx)
    R = SymbolicRing(p, 1, G.coordinates)
    values = {'X0': R.lam(1) * R.var(f"X{p - 1}")}
    values.update({coordinate_name('X', (j,)): R.var(f"X{j - 1}") for j in range(1, p)})
    moved = R.evaluate(V.equations[0], values)
    expected = R.lam(1) * R.evaluate(G.equations[0], R.generic_point(G.coordinates))
    if moved != expected:
        return refuted(_residue(moved - expected), "coordinate change does not match V")
    report = certify_wound_permawound(G.equations[0])
    if not report.permawound:
        return unknown(f"certifier did not prove permawound: {report.to_json()}")
    return verified(f"family {report.family}")


@claim('phi_pullback')
def verify_phi_pullback(n, p, r=1):
    """
    phi_n is a homomorphism V_(n+1) -> V_n, its coordinate characters pull
    back to K-combinations of p-th powers, and F_n(phi_n(X)) reduces to 0
    modulo the V_(n+1) relation.
    """
    if n < 1:
        return skipped("phi_n needs n >= 1")
    if not verify_phi_homomorphism(p, n, r):
        return refuted("phi_n is not additive or misses F_n", "homomorphism identity")
    if not verify_hom_chi_pullback(n, p, r):
        return refuted("a character pulls back with a linear term", "p-th power pull-back")
    ctx = FieldContext(p, 1, r)
    source, target, forms = phi_forms(ctx, n)
    R = SymbolicRing(p, r, source.coordinates)
    point = R.generic_point(source.coordinates)
    image = {name: R.evaluate(F, point) for name, F in forms.items()}
    system = RewriteSystem.from_equations(R, source.equations, ['X'])
    residue = system.normal_form(R.evaluate(target.equations[0], image))
    if residue:
        return refuted(_residue(residue), f"F_{n} of the image does not reduce to 0")
    return verified(f"{len(forms) - 1} characters Z_g")


SELFTEST = (
    ('largergp', {'n': 2, 'p': 2}),
    ('largergp', {'n': 3, 'p': 2}),
    ('Ws_transform', {'s': 1, 'p': 2, 'r': 2}),
    ('Ws_transform', {'s': 2, 'p': 2, 'r': 2}),
    ('Nprime_nonsmooth', {'s': 1, 'p': 2, 'm': 2}),
    ('Nprime_nonsmooth', {'s': 2, 'p': 2, 'm': 2}),
    ('Uprime_rewrites', {'s': 1, 'p': 2, 'm': 1}),
    ('Uprime_rewrites', {'s': 2, 'p': 2, 'm': 2}),
    ('pairing_membership', {'n': 1, 'p': 2, 'r': 2}),
    ('pairing_membership', {'n': 2, 'p': 2, 'r': 2}),
    ('weil_gm', {'p': 2}),
    ('phi_pullback', {'n': 1, 'p': 2, 'r': 1}),
)


def selftest(battery=SELFTEST):
    """Run the p = 2 battery and return every report."""
    return [run_claim(name, **params) for name, params in battery]
