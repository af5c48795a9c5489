"""
Symbolic Coordinates Module

Polynomial rings F_p[l1..lr, coordinates] used to check identities between
p-polynomials with the coordinates left as indeterminates, and the
matching value algebra for concrete points over K or K(T).
"""

import logging

from sympy.polys.domains import GF
from sympy.polys.orderings import lex
from sympy.polys.rings import ring

from tools.field.indices import lam_power
from tools.ppoly.forms import frobenius_of
from tools.utils.error_utils import UnsupportedTower

logger = logging.getLogger(__name__)


class FieldAlgebra:
    """Values in K or K(T): lambdas and Frobenius come from the field context."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.p = ctx.p

    def one(self):
        return self.ctx.one()

    def zero(self):
        return self.ctx.zero()

    def lam(self, i):
        return self.ctx.lam(i)

    def lam_power(self, f):
        return lam_power(self.ctx, f)

    def frobenius(self, x, d=1):
        return frobenius_of(x, d, self.p)

    def evaluate(self, F, values):
        return F.evaluate(values)


class SymbolicRing:
    """
    F_p[l1..lr, names] with l_i standing for lambda_i^(1/p^root_level).

    Coefficients are in F_p, so Frobenius multiplies every exponent by p.
    ``root_level`` > 0 allows lambda exponents with denominators dividing
    p^root_level, as needed over K(lambda^(1/p^infinity)).
    """

    def __init__(self, p, r, names=(), root_level=0):
        self.p, self.r = p, r
        self.names = tuple(names)
        self.root_level = root_level
        symbols = [f"l{i}" for i in range(1, r + 1)] + list(self.names)
        self.ring, *gens = ring(','.join(symbols), GF(p, symmetric=False), lex)
        self.lambda_roots = gens[:r]
        self.coordinates = dict(zip(self.names, gens[r:]))

    def one(self):
        return self.ring.one

    def zero(self):
        return self.ring.zero

    def var(self, name):
        return self.coordinates[name]

    def lam(self, i):
        return self.lambda_roots[i - 1] ** (self.p ** self.root_level)

    def lam_power(self, f, divide=0):
        """lambda^(f / p^divide); every f(i) * p^(root_level - divide) must be an integer."""
        scale = self.p ** self.root_level
        value = self.ring.one
        for i, a in enumerate(f):
            numerator = a * scale
            if numerator % (self.p ** divide):
                raise ValueError(f"lambda_{i + 1}^({a}/{self.p}^{divide}) needs a deeper root level")
            exponent = numerator // self.p ** divide
            if exponent:
                value = value * self.lambda_roots[i] ** exponent
        return value

    def frobenius(self, x, d=1):
        if d == 0:
            return x
        factor = self.p ** d
        return self.ring.from_dict({tuple(e * factor for e in monom): c for monom, c in x.terms()})

    def from_element(self, c):
        """
        Embed a polynomial element of the base field F_p(l1..lr).

        Raises:
            UnsupportedTower: For towers, e > 1 or non-polynomial elements
        """
        if c.ctx.adjunctions or c.ctx.e > 1:
            raise UnsupportedTower("symbolic coefficients must lie in F_p(l1..lr)")
        num, den = c.data
        if not den.is_one:
            raise UnsupportedTower(f"coefficient {c.to_expr()} is not a polynomial in the lambdas")
        scale = self.p ** self.root_level
        pad = (0,) * len(self.names)
        return self.ring.from_dict({
            tuple(a * scale for a in monom) + pad: int(coeff) % self.p for monom, coeff in num.terms()
        })

    def evaluate(self, F, values):
        """F at symbolic values, a dict from F's variables to ring elements."""
        total = self.ring.zero
        for term in F.terms:
            total += self.from_element(term.coeff) * self.frobenius(values[term.var], term.d)
        return total

    def generic_point(self, variables):
        return {v: self.var(v) for v in variables}
