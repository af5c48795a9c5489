"""
Partial Fraction Module

Classical partial fractions over K(T) on a declared pole support, and the
coordinatewise decomposition of pointed maps P^1 -> G into commutative
p-polynomial groups. The base point is infinity; ``to_infinity`` moves a
finite base point there.
"""

import logging
from dataclasses import dataclass

from tools.field.dense import dup_divmod, dup_gcdex, dup_monic, dup_mul, dup_power, dup_strip
from tools.field.element import KElement
from tools.field.ratfunc import RationalFunctionT
from tools.groups.presets import membership
from tools.utils.error_utils import ComponentNotOnGroup, NotProper, UnsupportedDenominator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PoleSupport:
    """
    Distinct monic pairwise coprime polynomials q_i(T), one per pole.

    Attributes:
        ctx (FieldContext): Field of the coefficients
        polys (tuple): Coefficient lists (raw level data), lowest degree first
    """

    ctx: object
    polys: tuple

    @classmethod
    def from_functions(cls, ctx, functions):
        """
        Build a support from polynomial RationalFunctionT values.

        Raises:
            UnsupportedDenominator: For constants, non-polynomials or non-coprime entries
        """
        ops = ctx.top
        polys = []
        for q in functions:
            q = q.lift(ctx) if q.ctx is not ctx else q
            if not q.is_polynomial() or q.num_degree < 1:
                raise UnsupportedDenominator(f"pole polynomial {q.to_expr()} must be a nonconstant polynomial")
            polys.append(tuple(dup_monic(q.num, ops)))
        for i, a in enumerate(polys):
            for b in polys[i + 1:]:
                if len(dup_gcdex(list(a), list(b), ops)[2]) > 1:
                    raise UnsupportedDenominator("pole polynomials must be pairwise coprime")
        return cls(ctx, tuple(polys))

    def __len__(self):
        return len(self.polys)

    def functions(self):
        return [RationalFunctionT(self.ctx, list(q), [self.ctx.top.one], normalized=True) for q in self.polys]

    def to_json(self):
        return [q.to_expr() for q in self.functions()]


def _multiplicity(den, q, ops):
    """Largest e with q^e dividing den, and den / q^e."""
    e = 0
    while True:
        quotient, remainder = dup_divmod(den, q, ops)
        if remainder:
            return e, den
        den, e = quotient, e + 1


def pole_orders(G, support):
    """
    Exponent of every support polynomial in the denominator of G.

    Raises:
        UnsupportedDenominator: When the denominator has a factor outside the support
    """
    ops = G.ctx.top
    rest, orders = list(G.den), []
    for q in support.polys:
        e, rest = _multiplicity(rest, list(q), ops)
        orders.append(e)
    if len(dup_strip(rest, ops)) > 1:
        raise UnsupportedDenominator(f"denominator of {G.to_expr()} is not supported on the declared poles")
    return orders


def classical_pfd(G, support):
    """
    Split a proper rational function into one proper piece per pole.

    Args:
        G (RationalFunctionT): Function vanishing at infinity
        support (PoleSupport): Declared poles

    Returns:
        list: RationalFunctionT g_i with sum G and denominator a power of q_i

    Raises:
        NotProper: When G does not vanish at infinity
        UnsupportedDenominator: When G has a pole outside the support
    """
    ctx = support.ctx
    G = G.lift(ctx) if G.ctx is not ctx else G
    if G.is_zero():
        return [RationalFunctionT.zero(ctx) for _ in support.polys]
    if not G.is_proper():
        raise NotProper(f"{G.to_expr()} does not vanish at infinity")
    ops = ctx.top
    orders = pole_orders(G, support)
    powers = [dup_power(list(q), e, ops) for q, e in zip(support.polys, orders)]
    parts = []
    for i, Q in enumerate(powers):
        if orders[i] == 0:
            parts.append(RationalFunctionT.zero(ctx))
            continue
        cofactor = [ops.one]
        for j, other in enumerate(powers):
            if j != i:
                cofactor = dup_mul(cofactor, other, ops)
        s, _, _ = dup_gcdex(cofactor, Q, ops)
        numerator = dup_divmod(dup_mul(G.num, s, ops), Q, ops)[1]
        parts.append(RationalFunctionT(ctx, numerator, Q))
    logger.debug(f"split {G.to_expr()} over {len(support)} poles with orders {orders}")
    return parts


def compose(G, u):
    """G(u) for a rational function u, by Horner on numerator and denominator."""
    def horner(coeffs):
        value = RationalFunctionT.zero(u.ctx)
        for c in reversed(coeffs):
            value = value * u + KElement(G.ctx, c).lift(u.ctx)
        return value
    return horner(G.num) / horner(G.den)


def to_infinity(G, x):
    """G(x + 1/T): the base point x moves to infinity."""
    T = RationalFunctionT.t(G.ctx)
    return compose(G, T.inverse() + x)


def from_infinity(G, x):
    """G(1/(T - x)): inverse of ``to_infinity``."""
    T = RationalFunctionT.t(G.ctx)
    return compose(G, (T - x).inverse())


@dataclass
class PointedCurveMap:
    """
    A map (P^1 minus poles, infinity) -> (G, 0) given by K(T) coordinates.

    Attributes:
        group (GroupPresentation): Target
        values (dict): Coordinate name -> RationalFunctionT
    """

    group: object
    values: dict

    def __post_init__(self):
        self.values = self.group.values_map(self.values)

    def is_member(self):
        return membership(self.group, self.values)

    def is_pointed(self):
        return all(v.is_zero() or v.is_proper() for v in self.values.values())

    def __add__(self, other):
        return PointedCurveMap(self.group, {k: self.values[k] + other.values[k] for k in self.group.coordinates})

    def __eq__(self, other):
        if not isinstance(other, PointedCurveMap):
            return NotImplemented
        return self.group.coordinates == other.group.coordinates and all(
            self.values[k] == other.values[k] for k in self.group.coordinates)

    def to_json(self):
        return {k: v.to_expr() for k, v in self.values.items()}


def group_pfd(f, support):
    """
    Decompose a pointed map into maps with a single pole each.

    Args:
        f (PointedCurveMap): Map into a commutative preset
        support (PoleSupport): Declared poles

    Returns:
        list: One PointedCurveMap per support polynomial, summing to f

    Raises:
        NotProper: When some coordinate does not vanish at infinity
        ComponentNotOnGroup: When a component fails the group equations
    """
    split = {name: classical_pfd(value, support) for name, value in f.values.items()}
    components = []
    for i in range(len(support)):
        component = PointedCurveMap(f.group, {name: parts[i] for name, parts in split.items()})
        if not component.is_member():
            logger.error(f"component {i + 1} is not on {f.group.name}")
            raise ComponentNotOnGroup(f"component at pole {i + 1} fails the equations of {f.group.name}")
        components.append(component)
    return components
