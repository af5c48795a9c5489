"""
Tower Levels

Raw arithmetic for each level of a field tower. Level 0 is
F_q(l1, ..., lr), stored as a (numerator, denominator) pair of sympy ring
elements with a monic denominator free of the F_q generator. Every higher
level is F(z) for an Artin-Schreier or prime radical generator z, stored as
the tuple of coordinates on 1, z, ..., z^(m-1) over the level below.
"""

import itertools
import logging

from sympy import ZZ
from sympy.polys.domains import GF
from sympy.polys.galoistools import gf_irreducible_p
from sympy.polys.orderings import lex
from sympy.polys.rings import ring

from tools.field.dense import mat_inverse, mat_vec, dup_gcdex

logger = logging.getLogger(__name__)

ARTIN_SCHREIER = 'artin-schreier'
RADICAL = 'radical'


def conway_like_modulus(p, e):
    """
    First monic irreducible polynomial of degree e over F_p in lexicographic order.

    Args:
        p (int): Characteristic
        e (int): Degree

    Returns:
        list: Coefficients, highest degree first
    """
    for tail in itertools.product(range(p), repeat=e):
        candidate = [1] + list(tail)
        if gf_irreducible_p(candidate, p, ZZ):
            return candidate
    raise ValueError(f"no irreducible polynomial of degree {e} over F_{p}")


class BaseLevel:
    """F_q(l1..lr) with canonical (num, den) pairs."""

    depth = 0
    degree = 1
    kind = 'base'
    label = None

    def __init__(self, p, e, r):
        self.p, self.e, self.r = p, e, r
        names = [f"l{i}" for i in range(1, r + 1)] + (['w'] if e > 1 else [])
        self.ring, *gens = ring(','.join(names), GF(p, symmetric=False), lex)
        self.lambdas = gens[:r]
        self.w = gens[r] if e > 1 else None
        self.modulus = None
        if e > 1:
            coeffs = conway_like_modulus(p, e)
            self.modulus = sum((c * self.w ** (e - i) for i, c in enumerate(coeffs)), self.ring.zero)
        self.zero = (self.ring.zero, self.ring.one)
        self.one = (self.ring.one, self.ring.one)

    # Normal form

    def _reduce(self, poly):
        if self.modulus is None:
            return poly
        return poly.rem(self.modulus)

    def normalize(self, num, den):
        if den.is_zero:
            raise ZeroDivisionError("division by zero in F_q(l)")
        num = self._reduce(num)
        if num.is_zero:
            return self.zero
        if self.w is not None and den.degree(self.w) > 0:
            # multiply through by the Galois conjugates so the denominator is a norm
            den = self._reduce(den)
            conj, c = self.ring.one, den
            for _ in range(self.e - 1):
                c = self._reduce(c.compose(self.w, self.w ** self.p))
                conj = self._reduce(conj * c)
            num = self._reduce(num * conj)
            den = self._reduce(den * conj)
        g = den.gcd(num)
        if not g.is_one:
            num = num.exquo(g)
            den = den.exquo(g)
        lc = den.LC
        if lc != self.ring.domain.one:
            num = num.quo_ground(lc)
            den = den.quo_ground(lc)
        return (num, den)

    # Field operations

    def from_int(self, k):
        k %= self.p
        if not k:
            return self.zero
        return (self.ring(k), self.ring.one)

    def lam(self, i):
        return (self.lambdas[i - 1], self.ring.one)

    def is_zero(self, x):
        return x[0].is_zero

    def add(self, x, y):
        if x[0].is_zero:
            return y
        if y[0].is_zero:
            return x
        if x[1] == y[1]:
            return self.normalize(x[0] + y[0], x[1])
        return self.normalize(x[0] * y[1] + y[0] * x[1], x[1] * y[1])

    def neg(self, x):
        return (-x[0], x[1])

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if x[0].is_zero or y[0].is_zero:
            return self.zero
        return self.normalize(x[0] * y[0], x[1] * y[1])

    def inv(self, x):
        if x[0].is_zero:
            raise ZeroDivisionError("inverse of zero")
        return self.normalize(x[1], x[0])

    def pow(self, x, k):
        if k < 0:
            return self.pow(self.inv(x), -k)
        return self.normalize(x[0] ** k, x[1] ** k) if k else self.one

    def _frob_poly(self, poly, q):
        return self.ring.from_dict({tuple(a * q for a in monom): c for monom, c in poly.items()})

    def frobenius(self, x, d):
        if d == 0 or x[0].is_zero:
            return x
        q = self.p ** d
        return (self._reduce(self._frob_poly(x[0], q)), self._frob_poly(x[1], q))

    def expand(self, x, n):
        """
        Coordinates of x on the level-n p-basis: x = sum_f l^f c_f^(p^n).

        Args:
            x (tuple): Element
            n (int): Level

        Returns:
            dict: Multi-index tuple -> element, nonzero entries only
        """
        if x[0].is_zero:
            return {}
        q = self.p ** n
        num, den = x
        spread = self._reduce(num * den ** (q - 1))
        w_shift = self.p ** ((-n) % self.e) if self.e > 1 else 1
        buckets = {}
        for monom, c in spread.items():
            lam_exp = monom[:self.r]
            f = tuple(a % q for a in lam_exp)
            target = tuple(a // q for a in lam_exp)
            if self.e > 1:
                target += (monom[self.r] * w_shift,)
            bucket = buckets.setdefault(f, {})
            bucket[target] = bucket.get(target, self.ring.domain.zero) + c
        out = {}
        for f, bucket in buckets.items():
            value = self.normalize(self.ring.from_dict(bucket), den)
            if not value[0].is_zero:
                out[f] = value
        return out

    def embed(self, x):
        return x

    def project(self, x):
        return x

    # Constants

    def constants(self):
        """All elements of F_q, zero first."""
        out = []
        for coeffs in itertools.product(range(self.p), repeat=self.e):
            poly = self.ring.zero
            for k, c in enumerate(coeffs):
                if c:
                    poly += c * (self.w ** k if k else self.ring.one)
            out.append((poly, self.ring.one))
        return out

    def is_constant(self, x):
        return all(not any(m[:self.r]) for m in x[0].keys()) and x[1].is_one

    # Serialization

    def _poly_to_expr(self, poly):
        if poly.is_zero:
            return "0"
        names = [f"l{i}" for i in range(1, self.r + 1)] + (['w'] if self.e > 1 else [])
        parts = []
        for monom, c in poly.terms():
            factors = [f"{name}^{a}" if a > 1 else name for name, a in zip(names, monom) if a]
            coeff = int(c) % self.p
            if coeff != 1 or not factors:
                factors.insert(0, str(coeff))
            parts.append('*'.join(factors))
        return ' + '.join(parts)

    def to_expr(self, x):
        num = self._poly_to_expr(x[0])
        if x[1].is_one:
            return num
        return f"({num})/({self._poly_to_expr(x[1])})"


class ExtensionLevel:
    """One Artin-Schreier (z^p = z + a) or prime radical (z^m = a) step over ``parent``."""

    def __init__(self, parent, record, index):
        self.parent = parent
        self.record = record
        self.kind = record.kind
        self.m = record.degree
        self.label = record.label
        self.index = index
        self.depth = parent.depth + 1
        self.degree = parent.degree * self.m
        self.p, self.e, self.r = parent.p, parent.e, parent.r
        self.constant = record.constant

        P = parent
        m = self.m
        rule = [P.zero] * m
        rule[0] = record.constant
        if self.kind == ARTIN_SCHREIER:
            rule[1] = P.add(rule[1], P.one)
        self._rule = [(i, c) for i, c in enumerate(rule) if not P.is_zero(c)]
        self._modulus = [P.neg(c) for c in rule] + [P.one]

        self.zero = tuple([P.zero] * m)
        self.one = (P.one,) + tuple([P.zero] * (m - 1))
        self.gen = (P.zero, P.one) + tuple([P.zero] * (m - 2))
        self._gen_powers = {}
        self._basis_inverses = {}

    def embed(self, y):
        return (y,) + tuple([self.parent.zero] * (self.m - 1))

    def project(self, x):
        """The coordinate below when x lies in the parent level, else None."""
        if all(self.parent.is_zero(c) for c in x[1:]):
            return x[0]
        return None

    def from_int(self, k):
        return self.embed(self.parent.from_int(k))

    def lam(self, i):
        return self.embed(self.parent.lam(i))

    def is_zero(self, x):
        return all(self.parent.is_zero(c) for c in x)

    def add(self, x, y):
        return tuple(self.parent.add(a, b) for a, b in zip(x, y))

    def neg(self, x):
        return tuple(self.parent.neg(a) for a in x)

    def sub(self, x, y):
        return tuple(self.parent.sub(a, b) for a, b in zip(x, y))

    def scale(self, x, c):
        return tuple(self.parent.mul(a, c) for a in x)

    def mul(self, x, y):
        P, m = self.parent, self.m
        prod = [P.zero] * (2 * m - 1)
        for i, a in enumerate(x):
            if P.is_zero(a):
                continue
            for j, b in enumerate(y):
                if P.is_zero(b):
                    continue
                prod[i + j] = P.add(prod[i + j], P.mul(a, b))
        for k in range(2 * m - 2, m - 1, -1):
            t = prod[k]
            if P.is_zero(t):
                continue
            for i, c in self._rule:
                prod[k - m + i] = P.add(prod[k - m + i], P.mul(t, c))
        return tuple(prod[:m])

    def inv(self, x):
        if self.is_zero(x):
            raise ZeroDivisionError("inverse of zero")
        P = self.parent
        s, _, h = dup_gcdex(list(x), self._modulus, P)
        if len(h) != 1:
            raise ZeroDivisionError(f"{self.label} does not generate a field here")
        s = list(s) + [P.zero] * (self.m - len(s))
        return tuple(s[:self.m])

    def pow(self, x, k):
        if k < 0:
            return self.pow(self.inv(x), -k)
        result, base = self.one, x
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def gen_power(self, d):
        """z^(p^d), cached."""
        if d not in self._gen_powers:
            self._gen_powers[d] = self.pow(self.gen, self.p ** d)
        return self._gen_powers[d]

    def frobenius(self, x, d):
        if d == 0:
            return x
        P = self.parent
        zp = self.gen_power(d)
        coeffs = [P.frobenius(c, d) for c in x]
        acc = self.embed(coeffs[-1])
        for c in reversed(coeffs[:-1]):
            acc = self.add(self.mul(acc, zp), self.embed(c))
        return acc

    def _basis_inverse(self, n):
        if n not in self._basis_inverses:
            zp = self.gen_power(n)
            columns = [self.pow(zp, j) for j in range(self.m)]
            matrix = [[columns[j][i] for j in range(self.m)] for i in range(self.m)]
            self._basis_inverses[n] = mat_inverse(self.parent, matrix)
        return self._basis_inverses[n]

    def expand(self, x, n):
        P = self.parent
        coords = mat_vec(P, self._basis_inverse(n), list(x))
        parts = [P.expand(c, n) for c in coords]
        keys = set().union(*parts)
        out = {}
        for f in keys:
            value = tuple(part.get(f, P.zero) for part in parts)
            if not self.is_zero(value):
                out[f] = value
        return out

    def to_expr(self, x):
        terms = []
        for j, c in enumerate(x):
            if self.parent.is_zero(c):
                continue
            s = self.parent.to_expr(c)
            if ' ' in s or '/' in s:
                s = f"({s})"
            if j == 0:
                terms.append(s)
                continue
            power = self.label if j == 1 else f"{self.label}^{j}"
            terms.append(power if s == '1' else f"{s}*{power}")
        return ' + '.join(terms) if terms else "0"
