"""
Witness Module

Explicit preimages under F(X) = -X_0 + sum_{f in I} b^f X_f^p over K(T),
where b is a p-basis of K (the lambdas unless stated otherwise). Each
builder returns coordinates H with F(H) equal to a prescribed rational
function; Artin-Schreier and radical roots are adjoined when the current
tower lacks them.
"""

import logging
from dataclasses import dataclass, field

from tools.field.adjoin import adjoin_artin_schreier, adjoin_radical
from tools.field.dense import EchelonBasis, mat_inverse
from tools.field.element import KElement
from tools.field.expression import context_from_json, parse_element, parse_rational
from tools.field.indices import index_set, lam_power, lucas_binomial, unit_index
from tools.field.pbasis import pbasis_expand, try_pth_root
from tools.field.ratfunc import RationalFunctionT, substitute
from tools.utils.error_utils import PthPowerModulus, WitnessFailure
from tools.utils.format_utils import format_multi_index, parse_multi_index

logger = logging.getLogger(__name__)

TARGETS = ('V', 'weil_alphap')


class Frame:
    """A p-basis b_1..b_r of the current field with level-1 expansions in it."""

    def __init__(self, ctx, basis=None):
        self.ctx = ctx
        self.basis = tuple(ctx.lift(b) for b in basis) if basis is not None else tuple(ctx.lams())
        self.standard = basis is None or all(b == ctx.lam(i) for i, b in enumerate(self.basis, start=1))
        self._inverse = None

    def lift(self, ctx):
        if ctx is self.ctx:
            return self
        return Frame(ctx, None if self.standard else self.basis)

    @property
    def zero_index(self):
        return (0,) * self.ctx.r

    def indices(self):
        return index_set(self.ctx.p, 1, self.ctx.r)

    def monomial(self, f):
        value = self.ctx.one()
        for b, a in zip(self.basis, f):
            if a:
                value = value * b ** a
        return value

    def expand(self, x):
        """
        Coordinates y_g with x = sum_g b^g y_g^p.

        Returns:
            dict: Multi-index -> KElement, every index of I present
        """
        lam_coords = pbasis_expand(x, 1)
        if self.standard:
            return {f: lam_coords.coefficient(f) for f in self.indices()}
        ops = self.ctx.top
        if self._inverse is None:
            indices = self.indices()
            columns = [pbasis_expand(self.monomial(g), 1) for g in indices]
            matrix = [[columns[j].coefficient(f).data for j in range(len(indices))] for f in indices]
            self._inverse = mat_inverse(ops, matrix)
        vector = [lam_coords.coefficient(f).data for f in self.indices()]
        out = {}
        for g, row in zip(self.indices(), self._inverse):
            acc = ops.zero
            for a, b in zip(row, vector):
                acc = ops.add(acc, ops.mul(a, b))
            out[g] = KElement(self.ctx, acc)
        return out

    def apply(self, H, target='V'):
        """F(H); the alpha_p target has no -X_0 term."""
        total = RationalFunctionT.zero(self.ctx)
        for f, h in H.items():
            total = total + self.monomial(f) * h.frobenius(1)
        if target == 'V' and self.zero_index in H:
            total = total - H[self.zero_index]
        return total


# Witness arithmetic

def lift_witness(H, ctx):
    return {f: h.lift(ctx) for f, h in H.items()}


def add_witness(*parts):
    total = {}
    for H in parts:
        for f, h in H.items():
            total[f] = total[f] + h if f in total else h
    return {f: h for f, h in total.items() if not h.is_zero()}


def neg_witness(H):
    return {f: -h for f, h in H.items()}


def substitute_witness(H, alpha, d):
    if d == 0 and alpha == 1:
        return dict(H)
    return {f: substitute(h, alpha, d) for f, h in H.items()}


@dataclass
class WitnessCertificate:
    """
    F(H) = G(alpha * T^(p^d)) for the certified G.

    Attributes:
        ctx (FieldContext): Tower holding every value, adjunctions included
        alpha (KElement): Nonzero scale of the substitution
        d (int): Frobenius exponent of the substitution
        H (dict): Multi-index in I -> RationalFunctionT
        target (str): 'V' or 'weil_alphap'
        source (RationalFunctionT): The certified function, when known
    """

    ctx: object
    alpha: KElement
    d: int = 0
    H: dict = field(default_factory=dict)
    target: str = 'V'
    source: object = None

    def lift(self, ctx):
        return WitnessCertificate(ctx, ctx.lift(self.alpha), self.d, lift_witness(self.H, ctx), self.target,
                                  self.source.lift(ctx) if self.source is not None else None)

    def image(self):
        return Frame(self.ctx).apply(self.H, self.target)

    def to_json(self):
        return {
            'field': self.ctx.describe(),
            'target': self.target,
            'G': self.source.to_expr() if self.source is not None else None,
            'alpha': self.alpha.to_expr(),
            'd': self.d,
            'H': {format_multi_index(f): h.to_expr() for f, h in sorted(self.H.items())},
        }

    @classmethod
    def from_json(cls, data):
        """Rebuild a certificate, its tower included, from ``to_json`` output."""
        ctx = context_from_json(data['field'])
        H = {parse_multi_index(key, ctx.r): parse_rational(ctx, text) for key, text in data.get('H', {}).items()}
        source = parse_rational(ctx, data['G']) if data.get('G') else None
        return cls(ctx, parse_element(ctx, data.get('alpha', '1')), int(data.get('d', 0)), H,
                   data.get('target', 'V'), source)


def zero_certificate(ctx, source=None, target='V'):
    return WitnessCertificate(ctx, ctx.one(), 0, {}, target, source)


def verify_witness(G, cert):
    """
    Exact check F(cert.H) = G(cert.alpha * T^(p^cert.d)).

    Args:
        G (RationalFunctionT): Certified function, in cert.ctx or a subfield
        cert (WitnessCertificate): Certificate

    Returns:
        bool: True when the identity holds
    """
    if cert.alpha.is_zero():
        return False
    G = G.lift(cert.ctx)
    return cert.image() == substitute(G, cert.alpha, cert.d)


def checked(cert, G):
    """Attach G to cert and verify it; raises WitnessFailure when the identity fails."""
    cert.source = G.lift(cert.ctx)
    if not verify_witness(cert.source, cert):
        logger.error(f"witness for {G.to_expr()} does not verify")
        raise WitnessFailure(f"constructed witness for {G.to_expr()} fails verification")
    return cert


# Builders over an arbitrary frame; each returns (frame, H)

def _t(ctx):
    return RationalFunctionT.t(ctx)


def monomial_ppower_coordinates(frame, f, G, n):
    """H with F(H) = b^f G^(p^n) for 0 != f in I_n."""
    p = frame.ctx.p
    G = G.lift(frame.ctx)
    if n == 1:
        return {tuple(f): G} if not G.is_zero() else {}
    h = tuple(a % p for a in f)
    g = tuple(a // p for a in f)
    inner = frame.monomial(g) * G.frobenius(n - 1)
    if any(h):
        return {h: inner}
    return add_witness(monomial_ppower_coordinates(frame, g, G, n - 1), {frame.zero_index: inner})


def frobenius_diff_coordinates(frame, G, n):
    """H with F(H) = G^(p^n) - G: H_0 = G + G^p + ... + G^(p^(n-1))."""
    G = G.lift(frame.ctx)
    total = RationalFunctionT.zero(frame.ctx)
    for k in range(n):
        total = total + G.frobenius(k)
    return {frame.zero_index: total} if not total.is_zero() else {}


def simple_pole_coordinates(frame, beta, n):
    """(frame, H) with F(H) = beta/(T^(p^n) + b_1)."""
    ctx = frame.ctx
    beta = ctx.lift(beta)
    if beta.is_zero():
        return frame, {}
    ctx, gamma = adjoin_artin_schreier(ctx, beta / frame.basis[0])
    frame = frame.lift(ctx)
    p, r, b1 = ctx.p, ctx.r, frame.basis[0]
    T = _t(ctx)
    D = T ** p + b1
    H = {unit_index(r, 1, 0): (b1 * gamma) / D}
    for k in range(1, p):
        H[unit_index(r, 1, k)] = ctx.const(lucas_binomial(p - 1, k - 1, p)) * gamma * T ** (p - k) / D
    if n > 1:
        H = substitute_witness(H, ctx.one(), n - 1)
    return frame, add_witness(H)


def basis_pole_coordinates(frame, beta, ell, n):
    """
    (frame, H) with F(H) = beta T^ell/(T^(p^n) + b_1) for 0 <= ell < p^n.

    A simple-pole witness for b_1^s b^(p^n) / (T^(p^n) + b_1) is expanded at
    level n in powers of b_1; every component but the constant one is a
    p^n-th power multiple already in the image, and the constant one is
    the requested term.
    """
    ctx = frame.ctx
    beta = ctx.lift(beta)
    if beta.is_zero():
        return frame, {}
    p, r = ctx.p, ctx.r
    q = p ** n
    j = q - 1 - ell
    shift = (q - j) % q
    e = (j + shift) // q
    b1 = frame.basis[0]
    b = beta / (ctx.const(lucas_binomial(q - 1, j, p)) * b1 ** e)
    frame, H = simple_pole_coordinates(frame, b1 ** shift * b.frobenius(n), n)
    ctx = frame.ctx
    b, b1 = ctx.lift(b), frame.basis[0]
    T = _t(ctx)
    D = T ** q + b1
    parts = [H]
    for i in range(q):
        j_i = (i - shift) % q
        e_i = (shift + j_i) // q
        coeff = b1 ** e_i * b * ctx.const(lucas_binomial(q - 1, j_i, p))
        G_i = coeff * T ** (q - 1 - j_i) / D
        if i == 0:
            parts.append(neg_witness(frobenius_diff_coordinates(frame, G_i, n)))
        else:
            parts.append(neg_witness(monomial_ppower_coordinates(frame, unit_index(r, 1, i), G_i, n)))
    return frame, add_witness(*parts)


def complete_pbasis(mu):
    """
    A p-basis [mu, l_j for j != k] where l_k is the first lambda mu depends on.

    Raises:
        PthPowerModulus: When mu is a p-th power
    """
    ctx = mu.ctx
    coords = pbasis_expand(mu, 1)
    support = [f for f in coords.coefficients if any(f)]
    if not support:
        raise PthPowerModulus(f"{mu.to_expr()} is a p-th power")
    k = min(i for f in support for i, a in enumerate(f, start=1) if a)
    return [mu] + [ctx.lam(i) for i in range(1, ctx.r + 1) if i != k]


def coordinate_change(frame):
    """
    (frame, c, A) with F_b(A X) = c F_l(X) for the frame b and the lambdas l.

    Column f of A holds the b-coordinates of c l^f; c is chosen so the
    0-th b-coordinate of c l^f is c for f = 0 and vanishes otherwise.
    """
    ctx, p = frame.ctx, frame.ctx.p
    ops = ctx.top
    indices = frame.indices()
    lam_columns = {f: frame.expand(lam_power(ctx, f)) for f in indices}
    echelon = EchelonBasis(ops, len(indices))
    for f in indices:
        if not any(f):
            continue
        row = []
        for h in indices:
            g = tuple((-a) % p for a in h)
            carry = tuple((a + b) // p for a, b in zip(h, g))
            row.append((lam_columns[f][g] * frame.monomial(carry)).data)
        echelon.insert(row)
    z = [KElement(ctx, x) for x in echelon.kernel_vector()]
    c1 = ctx.zero()
    for h, z_h in zip(indices, z):
        c1 = c1 + frame.monomial(h) * z_h.frobenius(1)
    ctx, a = adjoin_radical(ctx, z[0] / c1, p - 1)
    frame = frame.lift(ctx)
    c = a.frobenius(1) * ctx.lift(c1)
    A = [[None] * len(indices) for _ in indices]
    for col, f in enumerate(indices):
        coords = frame.expand(c * lam_power(ctx, f))
        for row, g in enumerate(indices):
            A[row][col] = coords[g]
    logger.debug(f"coordinate change to the p-basis {[b.to_expr() for b in frame.basis]} with c = {c.to_expr()}")
    return frame, c, A


def pole_term_coordinates(beta, mu, ell, n):
    """(ctx, H) with F_l(H) = beta T^ell/(T^(p^n) + mu) for mu not a p-th power."""
    ctx = beta.ctx
    mu = ctx.lift(mu)
    frame = Frame(ctx, complete_pbasis(mu))
    if frame.standard:
        frame, H = basis_pole_coordinates(frame, beta, ell, n)
        return frame.ctx, H
    frame, c, A = coordinate_change(frame)
    frame, Y = basis_pole_coordinates(frame, c * frame.ctx.lift(beta), ell, n)
    ctx = frame.ctx
    ops = ctx.top
    indices = frame.indices()
    inverse = mat_inverse(ops, [[ctx.lift(x).data for x in row] for row in A])
    H = {}
    for f, row in zip(indices, inverse):
        total = RationalFunctionT.zero(ctx)
        for g, entry in zip(indices, row):
            if g in Y and not ops.is_zero(entry):
                total = total + KElement(ctx, entry) * Y[g]
        if not total.is_zero():
            H[f] = total
    return ctx, H


# Public witnesses (alpha = 1, d = 0)

def _pole_function(ctx, beta, mu, ell, n):
    T = _t(ctx)
    return ctx.lift(beta) * T ** ell / (T ** (ctx.p ** n) + ctx.lift(mu))


def witness_simple_pole(beta, n):
    """
    Certificate for beta/(T^(p^n) + l1).

    Args:
        beta (KElement): Numerator
        n (int): Positive level

    Returns:
        WitnessCertificate: alpha = 1, d = 0, verified
    """
    frame, H = simple_pole_coordinates(Frame(beta.ctx), beta, n)
    ctx = frame.ctx
    return checked(WitnessCertificate(ctx, ctx.one(), 0, H), _pole_function(ctx, beta, ctx.lam(1), 0, n))


def witness_monomial_ppower(f, G, n):
    """Certificate for l^f G^(p^n), 0 != f in I_n."""
    ctx = G.ctx
    H = monomial_ppower_coordinates(Frame(ctx), f, G, n)
    return checked(WitnessCertificate(ctx, ctx.one(), 0, H), lam_power(ctx, f) * G.frobenius(n))


def witness_frobenius_diff(G, n):
    """Certificate for G^(p^n) - G."""
    ctx = G.ctx
    H = frobenius_diff_coordinates(Frame(ctx), G, n)
    return checked(WitnessCertificate(ctx, ctx.one(), 0, H), G.frobenius(n) - G)


def witness_pole_term(beta, mu, ell, n):
    """
    Certificate for beta T^ell/(T^(p^n) + mu) with mu outside K^p.

    Raises:
        PthPowerModulus: When mu is a p-th power
    """
    if try_pth_root(beta.ctx.lift(mu)) is not None:
        raise PthPowerModulus(f"{mu.to_expr()} is a p-th power")
    ctx, H = pole_term_coordinates(beta, mu, ell, n)
    return checked(WitnessCertificate(ctx, ctx.one(), 0, H), _pole_function(ctx, beta, mu, ell, n))


# Certificate algebra

def substitute_certificate(cert, alpha, d):
    """
    Compose a certificate with a further substitution T -> alpha * T^(p^d).

    Returns:
        WitnessCertificate: Certifies the same source with scale
        cert.alpha * alpha^(p^cert.d) and exponent cert.d + d
    """
    ctx = alpha.ctx if alpha.ctx.is_extension_of(cert.ctx) else cert.ctx
    cert = cert.lift(ctx)
    alpha = ctx.lift(alpha)
    return WitnessCertificate(ctx, cert.alpha * alpha.frobenius(cert.d), cert.d + d,
                              substitute_witness(cert.H, alpha, d), cert.target, cert.source)


def add_certificates(first, second):
    """
    Certificate for the sum of two certified functions sharing (alpha, d).

    Raises:
        ValueError: When the substitutions or targets differ
    """
    ctx = second.ctx if second.ctx.is_extension_of(first.ctx) else first.ctx
    first, second = first.lift(ctx), second.lift(ctx)
    if first.alpha != second.alpha or first.d != second.d or first.target != second.target:
        raise ValueError("certificates with different substitutions do not add")
    source = None
    if first.source is not None and second.source is not None:
        source = first.source + second.source
    return WitnessCertificate(ctx, first.alpha, first.d, add_witness(first.H, second.H), first.target, source)
