"""
Adjunction Module

Root search for Artin-Schreier equations z^p - z = c and prime-to-p radicals
z^n = c, and the constant adjunctions used when no root exists yet. Existing
roots are always reused; among them the canonical-least one is returned.

Over the base level both searches are complete. Higher up, an n-th root is
looked for as an element from below times a power of the level generator
(over an Artin-Schreier level also of its conjugates z + t). An
Artin-Schreier root over an Artin-Schreier level is solved coordinate by
coordinate from the top; over a radical level the Frobenius permutes the
coordinates, and each cycle is closed from a prime-field starting value.
"""

import itertools
import logging

from sympy import factorint
from sympy.polys.matrices import DomainMatrix

from tools.field.element import KElement
from tools.field.indices import lucas_binomial
from tools.field.levels import ARTIN_SCHREIER, RADICAL
from tools.utils.error_utils import InseparableRadical, ZeroRadicand

logger = logging.getLogger(__name__)


def _key(level, data):
    text = level.to_expr(data)
    return (len(text), text)


# Base level: Artin-Schreier

def _base_as_root(level, c):
    """Solve A^p - A*B^(p-1) = N over F_p for c = N/B^p, or None."""
    if level.is_zero(c):
        return level.zero
    p, R = level.p, level.ring
    num, den = c
    if any(a % p for monom in den.keys() for a in monom):
        return None
    B = R.from_dict({tuple(a // p for a in monom): v for monom, v in den.items()})
    B_pow = B ** (p - 1)
    bounds = [max(B.degree(x), num.degree(x) // p) for x in level.lambdas]

    basis = []
    for exps in itertools.product(*(range(b + 1) for b in bounds)):
        for k in range(level.e):
            basis.append(exps + ((k,) if level.e > 1 else ()))
    columns = []
    for mono in basis:
        u = R.from_dict({mono: R.domain.one})
        columns.append(level._reduce(level._frob_poly(u, p) - u * B_pow))

    monomials = sorted(set(num.keys()).union(*(col.keys() for col in columns)))
    dom = R.domain
    rows = [[col.get(mono, dom.zero) for col in columns] + [num.get(mono, dom.zero)]
            for mono in monomials]
    matrix = DomainMatrix(rows, (len(rows), len(basis) + 1), dom)
    reduced, pivots = matrix.rref()
    if len(basis) in pivots:
        return None
    table = reduced.to_list()
    A = R.zero
    for row, col in enumerate(pivots):
        A += R.from_dict({basis[col]: table[row][len(basis)]})
    return level.normalize(A, B)


# Base level: radicals

def _lambda_leading(level, poly):
    """Leading l-monomial of poly and its F_q coefficient (a polynomial in w)."""
    r, R = level.r, level.ring
    lead = max(monom[:r] for monom in poly.keys())
    coeff = R.zero
    for monom, c in poly.items():
        if monom[:r] == lead:
            coeff += R.from_dict({(0,) * r + monom[r:]: c})
    return lead, coeff


def _fq_roots(level, value, ell):
    """All y in F_q (polynomials in w) with y^ell = value."""
    out = []
    for y, _ in level.constants()[1:]:
        if level._reduce(y ** ell) == value:
            out.append(y)
    return out


def _poly_root(level, poly, ell):
    R, r = level.ring, level.r
    if poly.is_zero:
        return R.zero
    lead, coeff = _lambda_leading(level, poly)
    if any(a % ell for a in lead):
        return None
    roots = _fq_roots(level, coeff, ell)
    if not roots:
        return None
    y = roots[0]
    base_exps = tuple(a // ell for a in lead)
    pad = (0,) * (len(R.gens) - r)
    A = y * R.from_dict({base_exps + pad: R.domain.one})
    scale = level.normalize(level._reduce(ell * y ** (ell - 1)), R.one)
    scale_inv = level.inv(scale)[0]
    budget = 1
    for a in lead:
        budget *= a // ell + 1
    for _ in range(budget * max(1, level.e) + 1):
        rest = level._reduce(poly - A ** ell)
        if rest.is_zero:
            return A
        mono, c = _lambda_leading(level, rest)
        shift = tuple(a - (ell - 1) * b for a, b in zip(mono, base_exps))
        if any(s < 0 for s in shift) or shift >= base_exps:
            return None
        A += level._reduce(c * scale_inv) * R.from_dict({shift + pad: R.domain.one})
    return None


def _base_nth_root(level, c, ell):
    if level.is_zero(c):
        return level.zero
    num, den = c
    B = _poly_root(level, den, ell)
    if B is None:
        return None
    A = _poly_root(level, num, ell)
    if A is None:
        return None
    return level.normalize(A, B)


def _roots_of_unity(base, ell):
    return [(y, base.ring.one) for y in _fq_roots(base, base.ring.one, ell)]


# Tower search

def _as_root(levels, k, c):
    level = levels[k]
    if k == 0:
        return _base_as_root(level, c)
    P = levels[k - 1]
    low = level.project(c)
    if low is not None:
        root = _as_root(levels, k - 1, low)
        if root is not None:
            return level.embed(root)
        if level.kind == ARTIN_SCHREIER:
            for t in range(1, level.p):
                shifted = P.sub(low, P.mul(P.from_int(t), level.constant))
                root = _as_root(levels, k - 1, shifted)
                if root is not None:
                    return level.add(level.embed(root), level.scale(level.gen, P.from_int(t)))
        return None
    if level.kind == ARTIN_SCHREIER:
        return _as_root_triangular(levels, k, c)
    return _as_root_cycles(levels, k, c)


def _as_root_triangular(levels, k, c):
    """
    Coordinates of a root over an Artin-Schreier level, top coordinate first.

    With z^p = z + a the z^i coordinate of g^p - g is
    g_i^p - g_i + sum_{j>i} binom(j, i) a^(j-i) g_j^p.
    """
    level, P = levels[k], levels[k - 1]
    m, a = level.m, level.constant

    def solve(i, chosen):
        rhs = c[i]
        for j in range(i + 1, m):
            coeff = P.mul(P.from_int(lucas_binomial(j, i, level.p)), P.pow(a, j - i))
            rhs = P.sub(rhs, P.mul(coeff, P.frobenius(chosen[j], 1)))
        root = _as_root(levels, k - 1, rhs)
        if root is None:
            return None
        for t in range(level.p):
            g = P.add(root, P.from_int(t))
            if i == 0:
                return {**chosen, 0: g}
            found = solve(i - 1, {**chosen, i: g})
            if found is not None:
                return found
        return None

    found = solve(m - 1, {})
    if found is None:
        return None
    return tuple(found[j] for j in range(m))


def _as_root_cycles(levels, k, c):
    """
    Coordinates of a root over a radical level z^m = b.

    The z^(ip mod m) coordinate of g^p - g is g_i^p b^(ip div m) - g_(ip mod m),
    so the constant coordinate solves its own equation one level down and the
    others split into the cycles of i -> ip mod m.
    """
    level, P = levels[k], levels[k - 1]
    low = _as_root(levels, k - 1, c[0])
    if low is None:
        return None
    coords = {0: low}
    for start in range(1, level.m):
        if start in coords:
            continue
        cycle = [start]
        while cycle[-1] * level.p % level.m != start:
            cycle.append(cycle[-1] * level.p % level.m)
        closed = _close_cycle(level, cycle, c)
        if closed is None:
            return None
        coords.update(closed)
    return tuple(coords[i] for i in range(level.m))


def _close_cycle(level, cycle, c):
    """Run g_(ip) = g_i^p b^(ip div m) - c_(ip) around a cycle from each prime-field start."""
    P, p, m = level.parent, level.p, level.m
    for offset in range(len(cycle)):
        order = cycle[offset:] + cycle[:offset]
        for t in range(p):
            first = P.from_int(t)
            chosen, value = {order[0]: first}, first
            for i in order:
                image = i * p % m
                value = P.sub(P.mul(P.frobenius(value, 1), P.pow(level.constant, i * p // m)), c[image])
                chosen.setdefault(image, value)
            if P.is_zero(P.sub(value, first)):
                return chosen
    return None


def _shifts(level, ell):
    """Powers of the generator (and its conjugates over an Artin-Schreier level) tried as root factors."""
    yield level.one
    if level.kind == RADICAL:
        for j in range(1, level.m):
            yield level.pow(level.gen, j)
        return
    for s in range(level.p):
        h = level.add(level.gen, level.from_int(s))
        for j in range(1, ell * level.p):
            yield level.pow(h, j)


def _nth_root(levels, k, c, ell):
    level = levels[k]
    if k == 0:
        return _base_nth_root(level, c, ell)
    for h in _shifts(level, ell):
        low = level.project(level.mul(c, level.inv(level.pow(h, ell))))
        if low is None:
            continue
        root = _nth_root(levels, k - 1, low, ell)
        if root is not None:
            return level.mul(level.embed(root), h)
    return None


# Public operations

def artin_schreier_root(c):
    """An existing root of z^p - z = c in the tower of c, canonical-least, or None."""
    ctx, top = c.ctx, c.ctx.top
    root = _as_root(ctx.levels, len(ctx.levels) - 1, c.data)
    if root is None:
        return None
    candidates = [top.add(root, top.from_int(t)) for t in range(ctx.p)]
    return KElement(ctx, min(candidates, key=lambda d: _key(top, d)))


def adjoin_artin_schreier(ctx, c):
    """
    Return (context, g) with g^p - g = c, adjoining g only when no root exists.

    Args:
        ctx (FieldContext): Current context
        c (KElement): Constant in ``ctx``

    Returns:
        tuple: (FieldContext, KElement)
    """
    ctx.check(c)
    root = artin_schreier_root(c)
    if root is not None:
        return ctx, root
    child = ctx.child(ARTIN_SCHREIER, ctx.p, c)
    logger.debug(f"Artin-Schreier adjunction for {c.to_expr()}")
    return child, child.generator(child.adjunctions[-1].label)


def nth_root(c, ell):
    """An existing root of z^ell = c (ell prime, ell != p), canonical-least, or None."""
    ctx, top = c.ctx, c.ctx.top
    root = _nth_root(ctx.levels, len(ctx.levels) - 1, c.data, ell)
    if root is None:
        return None
    candidates = [top.mul(root, ctx.base_constant(u).data) for u in _roots_of_unity(ctx.base, ell)]
    return KElement(ctx, min(candidates, key=lambda d: _key(top, d)))


def adjoin_radical(ctx, c, n):
    """
    Return (context, a) with a^n = c, reusing existing roots.

    Composite n is handled as a chain of prime radicals.

    Args:
        ctx (FieldContext): Current context
        c (KElement): Nonzero radicand
        n (int): Exponent prime to p

    Returns:
        tuple: (FieldContext, KElement)

    Raises:
        InseparableRadical: If p divides n
        ZeroRadicand: If c is zero
    """
    ctx.check(c)
    if n < 1:
        raise ValueError(f"radical exponent must be positive, got {n}")
    if n % ctx.p == 0:
        raise InseparableRadical(f"{n} is divisible by p={ctx.p}")
    if c.is_zero():
        raise ZeroRadicand("cannot take a radical of zero")
    value = c
    for ell, mult in sorted(factorint(n).items()):
        for _ in range(mult):
            root = nth_root(value, ell)
            if root is None:
                ctx = ctx.child(RADICAL, ell, value)
                logger.debug(f"Radical adjunction of degree {ell} for {value.to_expr()}")
                root = ctx.generator(ctx.adjunctions[-1].label)
            value = root
    return ctx, value
