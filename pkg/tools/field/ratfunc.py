"""
Rational Function Module

K(T) over the top level of a field context: canonical pairs of coefficient
lists with a monic denominator coprime to the numerator.
"""

from tools.field.dense import (
    dup_add, dup_compose_monomial, dup_degree, dup_divmod, dup_frobenius, dup_gcdex,
    dup_mul, dup_neg, dup_scale, dup_strip,
)
from tools.field.element import KElement
from tools.utils.error_utils import ContextMismatch, ZeroScale


class RationalFunctionT:
    __slots__ = ('ctx', 'num', 'den')

    def __init__(self, ctx, num, den, normalized=False):
        self.ctx = ctx
        if normalized:
            self.num, self.den = num, den
        else:
            self.num, self.den = _normalize(ctx.top, num, den)

    # Constructors

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, [], [ctx.top.one], normalized=True)

    @classmethod
    def one(cls, ctx):
        return cls(ctx, [ctx.top.one], [ctx.top.one], normalized=True)

    @classmethod
    def t(cls, ctx):
        return cls(ctx, [ctx.top.zero, ctx.top.one], [ctx.top.one], normalized=True)

    @classmethod
    def constant(cls, value):
        ops = value.ctx.top
        num = [] if ops.is_zero(value.data) else [value.data]
        return cls(value.ctx, num, [ops.one], normalized=True)

    @classmethod
    def polynomial(cls, ctx, coeffs):
        """From KElement coefficients, lowest degree first."""
        ops = ctx.top
        data = [ctx.lift(c).data if isinstance(c, KElement) else ops.from_int(c) for c in coeffs]
        return cls(ctx, dup_strip(data, ops), [ops.one], normalized=True)

    @classmethod
    def monomial(cls, coeff, k):
        ops = coeff.ctx.top
        if coeff.is_zero():
            return cls.zero(coeff.ctx)
        return cls(coeff.ctx, [ops.zero] * k + [coeff.data], [ops.one], normalized=True)

    # Coercion

    def _coerce(self, other):
        if isinstance(other, RationalFunctionT):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch("rational functions live in different field contexts")
            return other
        if isinstance(other, KElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch("constant lives in a different field context")
            return RationalFunctionT.constant(other)
        if isinstance(other, int):
            return RationalFunctionT.constant(self.ctx.const(other))
        return None

    # Arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        ops = self.ctx.top
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return RationalFunctionT(self.ctx, dup_add(self.num, other.num, ops), self.den)
        num = dup_add(dup_mul(self.num, other.den, ops), dup_mul(other.num, self.den, ops), ops)
        return RationalFunctionT(self.ctx, num, dup_mul(self.den, other.den, ops))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunctionT(self.ctx, dup_neg(self.num, self.ctx.top), self.den, normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        ops = self.ctx.top
        if not self.num or not other.num:
            return RationalFunctionT.zero(self.ctx)
        if len(other.num) == 1 and len(other.den) == 1:
            return RationalFunctionT(self.ctx, dup_scale(self.num, other.num[0], ops), self.den,
                                     normalized=True)
        return RationalFunctionT(self.ctx, dup_mul(self.num, other.num, ops),
                                 dup_mul(self.den, other.den, ops))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunctionT(self.ctx, self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = RationalFunctionT.one(self.ctx), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # Structure

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (KElement, int)):
            other = self._coerce(other)
        if not isinstance(other, RationalFunctionT):
            return NotImplemented
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(self.num), tuple(self.den)))

    @property
    def num_degree(self):
        return dup_degree(self.num)

    @property
    def den_degree(self):
        return dup_degree(self.den)

    def numerator(self):
        return [KElement(self.ctx, c) for c in self.num]

    def denominator(self):
        return [KElement(self.ctx, c) for c in self.den]

    def is_polynomial(self):
        return len(self.den) == 1

    def is_proper(self):
        return dup_degree(self.num) < dup_degree(self.den)

    def constant_value(self):
        """The KElement when this function is constant, else None."""
        if len(self.den) == 1 and len(self.num) <= 1:
            return KElement(self.ctx, self.num[0]) if self.num else self.ctx.zero()
        return None

    def split_polynomial_part(self):
        """(polynomial part, proper part) with self = their sum."""
        ops = self.ctx.top
        q, r = dup_divmod(self.num, self.den, ops)
        return (RationalFunctionT(self.ctx, q, [ops.one], normalized=True),
                RationalFunctionT(self.ctx, r, self.den, normalized=True))

    def frobenius(self, d=1):
        ops = self.ctx.top
        return RationalFunctionT(self.ctx, dup_frobenius(self.num, d, ops),
                                 dup_frobenius(self.den, d, ops), normalized=True)

    def substitute(self, alpha, d):
        return substitute(self, alpha, d)

    def lift(self, ctx):
        if ctx is self.ctx or ctx == self.ctx:
            return self
        num = [ctx.lift(KElement(self.ctx, c)).data for c in self.num]
        den = [ctx.lift(KElement(self.ctx, c)).data for c in self.den]
        return RationalFunctionT(ctx, num, den, normalized=True)

    # Serialization

    def to_expr(self):
        ops = self.ctx.top
        num = _poly_to_expr(ops, self.num)
        if len(self.den) == 1:
            return num
        return f"({num})/({_poly_to_expr(ops, self.den)})"

    def __str__(self):
        return self.to_expr()

    def __repr__(self):
        return f"RationalFunctionT({self.to_expr()!r})"


def _normalize(ops, num, den):
    num = dup_strip(num, ops)
    den = dup_strip(den, ops)
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    if not num:
        return [], [ops.one]
    if len(den) > 1:
        _, _, g = dup_gcdex(num, den, ops)
        if len(g) > 1:
            num = dup_divmod(num, g, ops)[0]
            den = dup_divmod(den, g, ops)[0]
    lead_inv = ops.inv(den[-1])
    return dup_scale(num, lead_inv, ops), dup_scale(den, lead_inv, ops)


def _poly_to_expr(ops, coeffs):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if ops.is_zero(c):
            continue
        s = ops.to_expr(c)
        if ' ' in s or '/' in s:
            s = f"({s})"
        power = '' if i == 0 else ('T' if i == 1 else f"T^{i}")
        if not power:
            terms.append(s)
        elif s == '1':
            terms.append(power)
        else:
            terms.append(f"{s}*{power}")
    return ' + '.join(terms) if terms else "0"


def substitute(G, alpha, d):
    """
    Return G(alpha * T^(p^d)).

    Args:
        G (RationalFunctionT): Function to substitute into
        alpha (KElement): Nonzero scale
        d (int): Frobenius exponent of the substitution

    Returns:
        RationalFunctionT: Canonical result

    Raises:
        ZeroScale: If alpha is zero
    """
    if alpha.is_zero():
        raise ZeroScale("substitution T -> alpha*T^(p^d) needs alpha != 0")
    G.ctx.check(alpha)
    ops = G.ctx.top
    k = G.ctx.p ** d
    num = dup_compose_monomial(G.num, alpha.data, k, ops)
    den = dup_compose_monomial(G.den, alpha.data, k, ops)
    return RationalFunctionT(G.ctx, num, den)
