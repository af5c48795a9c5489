"""
Certification Module

Reducedness, universality and wound/permawound certificates for
p-polynomials whose principal coefficients are single p-basis monomials
up to a p^N-th power.

With N the top degree of the principal part, a coefficient c is
``lambda^f * u^(p^N)`` when its level-N expansion has exactly one nonzero
coordinate f. Writing every coordinate x of degree p^d through its
level-(N - d) expansion turns the principal part into a sum of
``lambda^E * (...)^(p^N)`` pieces, E = f + g * p^d. Uniqueness of the
level-N expansion then decides everything: distinct classes E mod p^N
force the trivial zero, a shared class produces an explicit zero, and a
class map onto all of I_N solves P(x) = beta coordinate by coordinate.
"""

import logging
import random
from dataclasses import dataclass, field

from tools.field.indices import index_set, lam_power
from tools.field.pbasis import pbasis_expand
from tools.ppoly.forms import principal_part
from tools.utils.error_utils import UnsupportedFamily

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Certified:
    """A proved answer; ``zero`` carries the nontrivial zero of a non-reduced form."""

    value: bool
    zero: dict = None
    detail: str = ''

    def to_json(self):
        data = {'status': 'certified', 'value': self.value}
        if self.zero is not None:
            data['zero'] = {var: x.to_expr() for var, x in self.zero.items()}
        if self.detail:
            data['detail'] = self.detail
        return data


@dataclass(frozen=True)
class Unknown:
    reason: str

    def to_json(self):
        return {'status': 'unknown', 'reason': self.reason}


def is_certified(verdict, value=True):
    return isinstance(verdict, Certified) and verdict.value == value


def monomial_split(c, N):
    """(f, u) with c = l^f * u^(p^N), or None when c has several level-N coordinates."""
    if N == 0:
        return (0,) * c.ctx.r, c
    expansion = pbasis_expand(c, N)
    if len(expansion.coefficients) != 1:
        return None
    (f, u), = expansion.coefficients.items()
    return f, u


@dataclass
class ClassMap:
    """
    lambda-exponent classes mod p^N of an inflated principal part.

    ``owners`` maps each class to (term position, g, tau) with
    E = f + g * p^d = class + p^N * tau; ``collision`` holds the first two
    owners found for one class.
    """

    principal: object
    N: int
    units: list = field(default_factory=list)
    owners: dict = field(default_factory=dict)
    collision: tuple = None

    @property
    def complete(self):
        p, r = self.principal.ctx.p, self.principal.ctx.r
        return self.collision is None and len(self.owners) == p ** (self.N * r)


def class_map(P):
    """
    Build the class map of a principal part, or None outside the monomial fragment.

    Args:
        P (PrincipalPart): Principal part

    Returns:
        ClassMap | None: None when some coefficient has several level-N coordinates
    """
    p, r, N = P.ctx.p, P.ctx.r, P.N
    modulus = p ** N
    cmap = ClassMap(P, N)
    for position, term in enumerate(P.terms):
        split = monomial_split(term.coeff, N)
        if split is None:
            logger.debug(f"coefficient of {term.var} is not a monomial times a p^{N}-th power")
            return None
        f, u = split
        cmap.units.append((f, u))
        for g in index_set(p, N - term.d, r) if N > term.d else ((0,) * r,):
            E = tuple(a + b * p ** term.d for a, b in zip(f, g))
            cls = tuple(a % modulus for a in E)
            tau = tuple(a // modulus for a in E)
            if cls in cmap.owners:
                if cmap.collision is None:
                    cmap.collision = (cmap.owners[cls], (position, g, tau))
                continue
            cmap.owners[cls] = (position, g, tau)
    return cmap


def _explicit_zero(cmap):
    """
    A nontrivial zero from two terms sharing a class.

    x_j = l^h and x_i = -l^g * (u_j l^tau_j / (u_i l^tau_i))^(p^(N - d_i)) make the two
    pieces cancel; every other coordinate is 0.
    """
    P, N = cmap.principal, cmap.N
    ctx = P.ctx
    (i, g, tau_i), (j, h, tau_j) = cmap.collision
    term_i, term_j = P.terms[i], P.terms[j]
    u_i, u_j = cmap.units[i][1], cmap.units[j][1]
    ratio = (u_j * lam_power(ctx, tau_j)) / (u_i * lam_power(ctx, tau_i))
    zero = {var: ctx.zero() for var in P.variables}
    zero[term_j.var] = lam_power(ctx, h)
    zero[term_i.var] = -(lam_power(ctx, g) * ratio.frobenius(N - term_i.d))
    return zero


def certify_reduced(P):
    """
    Decide whether P has only the trivial zero.

    Args:
        P (PrincipalPart): Principal part of a form

    Returns:
        Certified | Unknown: Certified(False) carries an explicit zero
    """
    cmap = class_map(P)
    if cmap is None:
        logger.warning("reducedness outside the monomial fragment; answering Unknown")
        return Unknown("a principal coefficient has several level-N p-basis coordinates")
    if cmap.collision is None:
        return Certified(True, detail=f"{len(cmap.owners)} distinct classes mod p^{cmap.N}")
    zero = _explicit_zero(cmap)
    if not P.evaluate(zero).is_zero():
        raise RuntimeError("collision zero does not vanish")
    return Certified(False, zero=zero, detail="two terms share a lambda-exponent class")


def family_name(P, cmap=None):
    """
    Name of the universal shape P belongs to, or None.

    Args:
        P (PrincipalPart): Principal part

    Returns:
        str | None: 'full' (one common degree), 'Fn-shape' (degrees 1 and N)
        or 'class-bijective' (any other complete class map)
    """
    cmap = cmap or class_map(P)
    if cmap is None or not cmap.complete:
        return None
    degrees = {t.d for t in P.terms}
    if len(degrees) == 1:
        return 'full'
    if degrees == {1, P.N}:
        return 'Fn-shape'
    return 'class-bijective'


def solve_principal(P, beta):
    """
    Solve P(x) = beta exactly.

    Args:
        P (PrincipalPart): Principal part in a supported universal family
        beta (KElement): Target value

    Returns:
        dict: Coordinate values by variable name

    Raises:
        UnsupportedFamily: When the classes of P do not cover I_N exactly once
    """
    cmap = class_map(P)
    if cmap is None or not cmap.complete:
        raise UnsupportedFamily("principal part is not a supported universal family",
                                hint="coefficients must be monomials whose classes cover I_N once")
    ctx, N = P.ctx, cmap.N
    beta = ctx.lift(beta)
    solution = {var: ctx.zero() for var in P.variables}
    if beta.is_zero():
        return solution
    if N == 0:
        b = {(0,) * ctx.r: beta}
    else:
        b = pbasis_expand(beta, N).coefficients
    for cls, b_cls in b.items():
        position, g, tau = cmap.owners[cls]
        term = P.terms[position]
        u = cmap.units[position][1]
        y = b_cls / (u * lam_power(ctx, tau))
        piece = lam_power(ctx, g) * y.frobenius(N - term.d)
        solution[term.var] = solution[term.var] + piece
    return solution


@dataclass
class WoundReport:
    smooth: bool
    reduced: object
    universal: object
    family: str = None
    permawound: bool = False

    @property
    def wound(self):
        return is_certified(self.reduced)

    def to_json(self):
        return {
            'smooth': self.smooth,
            'reduced': self.reduced.to_json(),
            'universal': self.universal.to_json(),
            'family': self.family,
            'wound': self.wound,
            'permawound': self.permawound,
        }


def _battery(ctx, seed):
    rng = random.Random(seed)
    sample = ctx.zero()
    for f in index_set(ctx.p, 1, ctx.r):
        sample = sample + ctx.const(rng.randrange(ctx.p)) * lam_power(ctx, f) * ctx.lam(1) ** rng.randint(0, 3)
    return [ctx.zero(), ctx.one(), ctx.lam(1), sample / (ctx.lam(1) + 1)]


def certify_universal(P, seed=0):
    """
    Certified(True) when P is in a supported family and solves a test battery exactly.

    A distinct-class map that misses a class is Certified(False): beta = l^cls
    has no preimage.
    """
    cmap = class_map(P)
    if cmap is None:
        return Unknown("outside the monomial fragment")
    if cmap.collision is not None:
        return Unknown("principal part is not reduced; universality is not certified here")
    if not cmap.complete:
        missing = next(cls for cls in index_set(P.ctx.p, cmap.N, P.ctx.r) if cls not in cmap.owners)
        return Certified(False, detail=f"class {','.join(map(str, missing))} is not hit")
    for beta in _battery(P.ctx, seed):
        if P.evaluate(solve_principal(P, beta)) != beta:
            logger.warning(f"solve_principal missed {beta.to_expr()}")
            return Unknown("test battery failed")
    return Certified(True, detail=family_name(P, cmap))


def certify_wound_permawound(F, seed=0):
    """
    Smoothness, reducedness, universality and the derived wound/permawound flags.

    permawound needs reduced and universal principal part, and either a
    nonzero linear part or a form equal to its own principal part.

    Args:
        F (PPolynomial): Nonzero form
        seed (int): Seed for the random battery element

    Returns:
        WoundReport: The report
    """
    P = principal_part(F)
    smooth = bool(F.linear_part())
    reduced = certify_reduced(P)
    universal = certify_universal(P, seed)
    report = WoundReport(smooth, reduced, universal, family_name(P))
    homogeneous = len(F.canonical().terms) == len(P.terms)
    report.permawound = (is_certified(reduced) and is_certified(universal)
                         and (smooth or homogeneous))
    logger.debug(f"Certified {F.to_expr()}: wound={report.wound}, permawound={report.permawound}")
    return report
