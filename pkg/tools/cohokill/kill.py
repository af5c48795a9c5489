"""
Kill Module

Killing rational functions modulo the image of F: every G with poles on
declared factors T^(p^n) + mu becomes an F-image after a substitution
T -> alpha * T^(p^d). G is split into S-terms (monomials c T^m and pole
terms beta T^l/(T^(p^n) + mu)); the terms are killed one at a time while
the substitutions compose.
"""

import logging
from dataclasses import dataclass

from tools.field.adjoin import adjoin_artin_schreier, adjoin_radical
from tools.field.indices import unit_index
from tools.field.pbasis import pbasis_expand, try_pth_root
from tools.field.ratfunc import RationalFunctionT, substitute
from tools.pfd.decompose import PoleSupport, classical_pfd, pole_orders
from tools.utils.error_utils import UndeclaredPole, UnsupportedDenominator, WitnessFailure
from tools.cohokill.witness import (
    TARGETS, Frame, WitnessCertificate, add_witness, checked, frobenius_diff_coordinates, lift_witness,
    monomial_ppower_coordinates, substitute_witness, verify_witness, witness_pole_term, zero_certificate,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonomialTerm:
    """c T^m."""

    c: object
    m: int

    def substitute(self, alpha, d):
        ctx = alpha.ctx
        return MonomialTerm(ctx.lift(self.c) * alpha ** self.m, self.m * ctx.p ** d)

    def function(self, ctx):
        return RationalFunctionT.monomial(ctx.lift(self.c), self.m)

    def kill(self):
        return kill_monomial(self.c, self.m)


@dataclass(frozen=True)
class PoleTerm:
    """beta T^ell/(T^(p^n) + mu) with 0 <= ell < p^n."""

    beta: object
    mu: object
    ell: int
    n: int

    def substitute(self, alpha, d):
        ctx = alpha.ctx
        q = ctx.p ** self.n
        scale = alpha ** q
        beta, mu = ctx.lift(self.beta), ctx.lift(self.mu)
        return PoleTerm(beta * alpha ** self.ell / scale, mu / scale, self.ell * ctx.p ** d, self.n + d)

    def function(self, ctx):
        T = RationalFunctionT.t(ctx)
        return ctx.lift(self.beta) * T ** self.ell / (T ** (ctx.p ** self.n) + ctx.lift(self.mu))

    def kill(self):
        return kill_pole_term(self.beta, self.mu, self.ell, self.n)


class CongruenceAccumulator:
    """
    Running state of G(alpha T^(p^d)) = representative + F(H).

    Every absorbed term is removed from the representative; the remaining
    terms follow the composed substitution.
    """

    def __init__(self, G):
        self.ctx = G.ctx
        self.source = G
        self.alpha = G.ctx.one()
        self.d = 0
        self.H = {}
        self.representative = G

    def absorb(self, term):
        """Kill ``term`` (a term of the original G) under the current substitution."""
        current = term.substitute(self.ctx.lift(self.alpha), self.d)
        cert = current.kill()
        ctx = cert.ctx
        self._lift(ctx)
        rest = self.representative - current.function(ctx)
        self.representative = substitute(rest, cert.alpha, cert.d)
        self.H = add_witness(substitute_witness(self.H, cert.alpha, cert.d), cert.H)
        self.alpha = self.alpha * cert.alpha.frobenius(self.d)
        self.d += cert.d
        logger.debug(f"absorbed {type(term).__name__}; substitution now ({self.alpha.to_expr()}, {self.d})")

    def _lift(self, ctx):
        if ctx is self.ctx:
            return
        self.ctx = ctx
        self.source = self.source.lift(ctx)
        self.alpha = ctx.lift(self.alpha)
        self.H = lift_witness(self.H, ctx)
        self.representative = self.representative.lift(ctx)

    def certificate(self):
        if not self.representative.is_zero():
            raise WitnessFailure(f"terms left after killing: {self.representative.to_expr()}")
        return WitnessCertificate(self.ctx, self.alpha, self.d, self.H, 'V', self.source)


# Single terms

def _e1(ctx):
    return unit_index(ctx.r, 1, 1)


def _ppower_split(frame, c, inner):
    """Coordinates for sum_{f != 0} l^f inner(c_f)^p + inner(c_0)^p - inner(c_0), and c_0."""
    coords = pbasis_expand(c, 1)
    parts = []
    for f, c_f in coords.coefficients.items():
        if any(f):
            parts.append(monomial_ppower_coordinates(frame, f, inner(c_f), 1))
    c0 = coords.coefficient(frame.zero_index)
    parts.append(frobenius_diff_coordinates(frame, inner(c0), 1))
    return add_witness(*parts), c0


def _stacked(known, sub):
    """Certificate for known-part + sub-term given the certificate of the sub-term."""
    ctx = sub.ctx
    H = add_witness(substitute_witness(lift_witness(known, ctx), sub.alpha, sub.d), sub.H)
    return WitnessCertificate(ctx, sub.alpha, sub.d, H)


def kill_monomial(c, m):
    """
    Certificate for c T^m.

    Args:
        c (KElement): Coefficient
        m (int): Nonnegative degree

    Returns:
        WitnessCertificate: Verified; may live in a child context
    """
    ctx, p = c.ctx, c.ctx.p
    T = RationalFunctionT.t(ctx)
    G = RationalFunctionT.monomial(c, m)
    if c.is_zero():
        return zero_certificate(ctx, G)
    frame = Frame(ctx)
    if m == 0:
        ctx, b = adjoin_artin_schreier(ctx, c)
        cert = WitnessCertificate(ctx, ctx.one(), 0, {frame.zero_index: RationalFunctionT.constant(b)})
    elif m % p == 0:
        known, c0 = _ppower_split(frame, c, lambda x: x * T ** (m // p))
        cert = _stacked(known, kill_monomial(c0, m // p))
    else:
        ctx, alpha = adjoin_radical(ctx, ctx.lam(1) / c, m)
        T = RationalFunctionT.t(ctx)
        cert = WitnessCertificate(ctx, alpha, 1, {_e1(ctx): T ** m})
    return checked(cert, G)


def kill_pole_term(beta, mu, ell, n):
    """
    Certificate for beta T^ell/(T^(p^n) + mu).

    Args:
        beta (KElement): Numerator coefficient
        mu (KElement): Constant of the pole factor
        ell (int): 0 <= ell < p^n
        n (int): Nonnegative level

    Returns:
        WitnessCertificate: Verified; may live in a child context
    """
    ctx, p = beta.ctx, beta.ctx.p
    mu = ctx.lift(mu)
    q = p ** n
    if not 0 <= ell < q:
        raise ValueError(f"numerator degree {ell} must lie in [0, {q})")
    T = RationalFunctionT.t(ctx)
    G = beta * T ** ell / (T ** q + mu)
    if beta.is_zero():
        return zero_certificate(ctx, G)
    frame = Frame(ctx)
    lam1 = ctx.lam(1)
    if n == 0:
        # T -> (beta/l1) T^p turns beta/(T + mu) into l1/(T^p + mu l1/beta)
        alpha = beta / lam1
        nu = mu * lam1 / beta
        gamma = try_pth_root(nu)
        if gamma is None:
            inner = witness_pole_term(lam1, nu, 0, 1)
            cert = WitnessCertificate(inner.ctx, inner.ctx.lift(alpha), 1, inner.H)
        else:
            H = monomial_ppower_coordinates(frame, _e1(ctx), (T + gamma).inverse(), 1)
            cert = WitnessCertificate(ctx, alpha, 1, H)
        return checked(cert, G)
    gamma = try_pth_root(mu)
    if gamma is None:
        cert = witness_pole_term(beta, mu, ell, n)
    elif ell % p == 0:
        lower = T ** (q // p) + gamma
        known, c0 = _ppower_split(frame, beta, lambda x: x * T ** (ell // p) / lower)
        cert = _stacked(known, kill_pole_term(c0, gamma, ell // p, n - 1))
    else:
        ctx, alpha = adjoin_radical(ctx, beta / lam1, q - ell)
        T = RationalFunctionT.t(ctx)
        shifted = ctx.lift(gamma) / alpha ** (q // p)
        H = monomial_ppower_coordinates(Frame(ctx), _e1(ctx), T ** ell / (T ** q + shifted), 1)
        cert = WitnessCertificate(ctx, alpha, 1, H)
    return checked(cert, G)


# Whole functions

def s_terms(G, factors):
    """
    Split G into monomials and pole terms over the declared factors.

    Args:
        G (RationalFunctionT): Function to split
        factors (list): Pairs (n_i, mu_i) for the factors T^(p^n_i) + mu_i

    Returns:
        list: MonomialTerm values by ascending degree, then PoleTerm values by (n, ell)

    Raises:
        UndeclaredPole: When the denominator of G is not supported on the factors
    """
    ctx, p = G.ctx, G.ctx.p
    T = RationalFunctionT.t(ctx)
    polynomial, proper = G.split_polynomial_part()
    monomials = [MonomialTerm(c, m) for m, c in enumerate(polynomial.numerator()) if not c.is_zero()]
    if proper.is_zero():
        return monomials
    functions = [T ** (p ** n) + ctx.lift(mu) for n, mu in factors]
    try:
        support = PoleSupport.from_functions(ctx, functions)
        pieces = classical_pfd(proper, support)
    except UnsupportedDenominator as ex:
        raise UndeclaredPole(str(ex), hint="declare every pole as a factor T^(p^n) + mu") from ex
    poles = []
    for i, piece in enumerate(pieces):
        if piece.is_zero():
            continue
        n, mu = factors[i]
        e = pole_orders(piece, support)[i]
        k = 0
        while p ** k < e:
            k += 1
        numerator = piece * functions[i] ** (p ** k)
        mu_k = ctx.lift(mu).frobenius(k)
        for ell, beta in enumerate(numerator.numerator()):
            if not beta.is_zero():
                poles.append(PoleTerm(beta, mu_k, ell, n + k))
    poles.sort(key=lambda term: (term.n, term.ell))
    return monomials + poles


def _alphap_certificate(G):
    """d = 1: G(T^p) = N(T^p) D(T^p)^(p-1) / D(T^p)^p, coordinates from level-1 expansions."""
    ctx, p = G.ctx, G.ctx.p
    ops = ctx.top
    one = ctx.one()
    Np = substitute(RationalFunctionT(ctx, G.num, [ops.one], normalized=True), one, 1)
    Dp = substitute(RationalFunctionT(ctx, G.den, [ops.one], normalized=True), one, 1)
    P = Np * Dp ** (p - 1)
    columns = {}
    for k, a_k in enumerate(P.numerator()):
        if k % p or a_k.is_zero():
            continue
        for f, c in pbasis_expand(a_k, 1).coefficients.items():
            columns.setdefault(f, {})[k // p] = c
    H = {}
    for f, coeffs in columns.items():
        degree = max(coeffs)
        poly = RationalFunctionT.polynomial(ctx, [coeffs.get(j, ctx.zero()) for j in range(degree + 1)])
        H[f] = poly / Dp
    return WitnessCertificate(ctx, one, 1, add_witness(H), 'weil_alphap')


def kill_class(G, factors=(), target='V'):
    """
    One certificate for the whole of G.

    Args:
        G (RationalFunctionT): Function to kill
        factors (list): Declared pole factors (n_i, mu_i)
        target (str): 'V' or 'weil_alphap'

    Returns:
        WitnessCertificate: Verified certificate for G

    Raises:
        UndeclaredPole: When G has a pole off the declared factors
        ValueError: For an unknown target
    """
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}; expected one of {', '.join(TARGETS)}")
    if G.is_zero():
        return zero_certificate(G.ctx, G, target)
    if target == 'weil_alphap':
        return checked(_alphap_certificate(G), G)
    terms = s_terms(G, list(factors))
    logger.info(f"killing {G.to_expr()} through {len(terms)} terms")
    accumulator = CongruenceAccumulator(G)
    for term in terms:
        accumulator.absorb(term)
    return checked(accumulator.certificate(), G)


def replay_certificate(data):
    """
    Rebuild a serialized certificate and re-run the exact check.

    Args:
        data (dict): Output of ``WitnessCertificate.to_json``

    Returns:
        tuple: (WitnessCertificate, bool)
    """
    cert = WitnessCertificate.from_json(data)
    if cert.source is None:
        raise ValueError("certificate carries no certified function")
    return cert, verify_witness(cert.source, cert)
