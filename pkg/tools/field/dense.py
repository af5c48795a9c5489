"""
Dense Algebra Helpers

Univariate polynomials (coefficient lists, lowest degree first) and small
linear systems over any level of a field tower. ``ops`` is a level object
exposing zero, one, add, sub, neg, mul, inv and is_zero.
"""

import logging

logger = logging.getLogger(__name__)


def dup_strip(f, ops):
    f = list(f)
    while f and ops.is_zero(f[-1]):
        f.pop()
    return f


def dup_degree(f):
    return len(f) - 1


def dup_add(f, g, ops):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = ops.add(out[i], c)
    return dup_strip(out, ops)


def dup_neg(f, ops):
    return [ops.neg(c) for c in f]


def dup_sub(f, g, ops):
    return dup_add(f, dup_neg(g, ops), ops)


def dup_scale(f, c, ops):
    if ops.is_zero(c):
        return []
    return dup_strip([ops.mul(a, c) for a in f], ops)


def dup_mul(f, g, ops):
    if not f or not g:
        return []
    out = [ops.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if ops.is_zero(a):
            continue
        for j, b in enumerate(g):
            if ops.is_zero(b):
                continue
            out[i + j] = ops.add(out[i + j], ops.mul(a, b))
    return dup_strip(out, ops)


def dup_monic(f, ops):
    if not f:
        return []
    return dup_scale(f, ops.inv(f[-1]), ops)


def dup_divmod(f, g, ops):
    """
    Euclidean division f = q*g + r with deg r < deg g.

    Args:
        f (list): Dividend
        g (list): Nonzero divisor
        ops: Coefficient level

    Returns:
        tuple: (quotient, remainder)
    """
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = dup_strip(f, ops)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], r
    lead_inv = ops.inv(g[-1])
    q = [ops.zero] * (len(r) - dg)
    while r and len(r) - 1 >= dg:
        shift = len(r) - 1 - dg
        c = ops.mul(r[-1], lead_inv)
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = ops.sub(r[shift + i], ops.mul(c, b))
        r = dup_strip(r, ops)
    return dup_strip(q, ops), r


def dup_rem(f, g, ops):
    return dup_divmod(f, g, ops)[1]


def dup_gcdex(f, g, ops):
    """
    Extended Euclid: returns (s, t, h) with s*f + t*g = h and h monic.

    Args:
        f (list): First polynomial
        g (list): Second polynomial
        ops: Coefficient level

    Returns:
        tuple: (s, t, h)
    """
    r0, r1 = dup_strip(f, ops), dup_strip(g, ops)
    s0, s1 = [ops.one], []
    t0, t1 = [], [ops.one]
    while r1:
        q, r = dup_divmod(r0, r1, ops)
        r0, r1 = r1, r
        s0, s1 = s1, dup_sub(s0, dup_mul(q, s1, ops), ops)
        t0, t1 = t1, dup_sub(t0, dup_mul(q, t1, ops), ops)
    if not r0:
        return [], [], []
    lead_inv = ops.inv(r0[-1])
    return dup_scale(s0, lead_inv, ops), dup_scale(t0, lead_inv, ops), dup_scale(r0, lead_inv, ops)


def dup_gcd(f, g, ops):
    return dup_gcdex(f, g, ops)[2]


def dup_is_one(f, ops):
    return len(f) == 1 and f[0] == ops.one


def dup_power(f, k, ops):
    result = [ops.one]
    base = f
    while k:
        if k & 1:
            result = dup_mul(result, base, ops)
        k >>= 1
        if k:
            base = dup_mul(base, base, ops)
    return result


def dup_compose_monomial(f, alpha, k, ops):
    """Return f(alpha * T^k) for k >= 1."""
    if not f:
        return []
    out = [ops.zero] * ((len(f) - 1) * k + 1)
    scale = ops.one
    for i, c in enumerate(f):
        if i:
            scale = ops.mul(scale, alpha)
        out[i * k] = ops.mul(c, scale)
    return dup_strip(out, ops)


def dup_frobenius(f, d, ops):
    """Return f(T)^{p^d}: Frobenius on coefficients, exponents scaled by p^d."""
    if d == 0 or not f:
        return list(f)
    q = ops.p ** d
    out = [ops.zero] * ((len(f) - 1) * q + 1)
    for i, c in enumerate(f):
        out[i * q] = ops.frobenius(c, d)
    return dup_strip(out, ops)


# Linear algebra over a level

def mat_inverse(ops, matrix):
    """
    Invert a square matrix by Gauss-Jordan elimination.

    Args:
        ops: Coefficient level
        matrix (list): Rows of level elements

    Returns:
        list: Rows of the inverse

    Raises:
        ZeroDivisionError: If the matrix is singular
    """
    n = len(matrix)
    aug = [list(row) + [ops.one if i == j else ops.zero for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if not ops.is_zero(aug[i][col])), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = ops.inv(aug[col][col])
        aug[col] = [ops.mul(v, inv) for v in aug[col]]
        for i in range(n):
            if i == col or ops.is_zero(aug[i][col]):
                continue
            factor = aug[i][col]
            aug[i] = [ops.sub(a, ops.mul(factor, b)) for a, b in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def mat_vec(ops, matrix, vector):
    out = []
    for row in matrix:
        acc = ops.zero
        for a, b in zip(row, vector):
            if ops.is_zero(a) or ops.is_zero(b):
                continue
            acc = ops.add(acc, ops.mul(a, b))
        out.append(acc)
    return out


class EchelonBasis:
    """Row-echelon span of vectors over a level, for rank and membership tests."""

    def __init__(self, ops, width):
        self.ops = ops
        self.width = width
        self.rows = []

    def reduce(self, vector):
        ops = self.ops
        v = list(vector)
        for pivot, row in self.rows:
            if ops.is_zero(v[pivot]):
                continue
            factor = v[pivot]
            v = [ops.sub(a, ops.mul(factor, b)) for a, b in zip(v, row)]
        return v

    def contains(self, vector):
        return all(self.ops.is_zero(c) for c in self.reduce(vector))

    def insert(self, vector):
        """Add a vector; returns True when it enlarged the span."""
        ops = self.ops
        v = self.reduce(vector)
        pivot = next((i for i, c in enumerate(v) if not ops.is_zero(c)), None)
        if pivot is None:
            return False
        inv = ops.inv(v[pivot])
        v = [ops.mul(c, inv) for c in v]
        reduced = []
        for p, row in self.rows:
            if not ops.is_zero(row[pivot]):
                factor = row[pivot]
                row = [ops.sub(a, ops.mul(factor, b)) for a, b in zip(row, v)]
            reduced.append((p, row))
        self.rows = reduced + [(pivot, v)]
        return True

    @property
    def rank(self):
        return len(self.rows)

    def kernel_vector(self):
        """A nonzero x with row . x = 0 for every inserted row, or None at full rank."""
        ops = self.ops
        pivots = {pivot for pivot, _ in self.rows}
        free = next((j for j in range(self.width) if j not in pivots), None)
        if free is None:
            return None
        x = [ops.zero] * self.width
        x[free] = ops.one
        for pivot, row in self.rows:
            x[pivot] = ops.neg(row[free])
        return x
