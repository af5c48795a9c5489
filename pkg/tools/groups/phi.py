"""
Phi Module

The surjection phi_n from V_(n+1) onto V_n that keeps X and sends the
class of g in I_n to Z_g = sum_{f = g mod p^n} l^((f - g)/p^n) X_f^p,
its kernel equations and the symbolic checks that phi_n is a
homomorphism whose coordinate characters pull back to p-th powers.
"""

import logging

from tools.field.context import FieldContext
from tools.field.indices import lam_power
from tools.groups.presets import GroupPoint, make_group, membership, vn_indices
from tools.groups.symbolic import SymbolicRing
from tools.ppoly.forms import PPolynomial, Term
from tools.utils.error_utils import BadParams, NotAMember
from tools.utils.format_utils import coordinate_name

logger = logging.getLogger(__name__)


def _check_level(n):
    if int(n) < 1:
        raise BadParams(f"phi_n needs n >= 1, got {n}")
    return int(n)


def _congruent(f, g, modulus):
    return all((a - b) % modulus == 0 for a, b in zip(f, g))


def phi_forms(ctx, n):
    """
    The coordinates of phi_n as forms in the coordinates of V_(n+1).

    Args:
        ctx (FieldContext): Field
        n (int): Target level

    Returns:
        tuple: (source GroupPresentation, target GroupPresentation,
            dict from target coordinate to PPolynomial over source coordinates)
    """
    n = _check_level(n)
    source = make_group('Vn', ctx, n=n + 1)
    target = make_group('Vn', ctx, n=n)
    q = ctx.p ** n
    forms = {'X': PPolynomial(ctx, source.coordinates, [Term(ctx.one(), 'X', 0)])}
    for g in vn_indices(ctx.p, n, ctx.r):
        terms = []
        for f in vn_indices(ctx.p, n + 1, ctx.r):
            if _congruent(f, g, q):
                shift = tuple((a - b) // q for a, b in zip(f, g))
                terms.append(Term(lam_power(ctx, shift), coordinate_name('X', f), 1))
        forms[coordinate_name('X', g)] = PPolynomial(ctx, source.coordinates, terms)
    return source, target, forms


def apply_phi(n, ctx, values):
    """
    Image of a point of V_(n+1) under phi_n.

    Args:
        n (int): Target level
        ctx (FieldContext): Field of the point
        values (dict | list | GroupPoint): Coordinates of V_(n+1)

    Returns:
        GroupPoint: Point of V_n

    Raises:
        NotAMember: When the input is not on V_(n+1)
    """
    source, target, forms = phi_forms(ctx, n)
    if isinstance(values, GroupPoint):
        values = values.values
    values = source.values_map(values)
    if not membership(source, values):
        raise NotAMember(f"point is not on V_{n + 1}")
    image = {name: F.evaluate(values) for name, F in forms.items()}
    return GroupPoint(target, image)


def kernel_equations(ctx, n):
    """
    The kernel of phi_n: X = 0 plus one Weil alpha_p equation Z_g = 0 per
    class g in I_n with p not dividing g.

    Returns:
        list: PPolynomials over the coordinates of V_(n+1), X = 0 first
    """
    _, _, forms = phi_forms(ctx, n)
    return list(forms.values())


def kernel_count(p, n, r):
    """Number of Weil alpha_p factors of ker(phi_n)."""
    return p ** (n * r) - p ** ((n - 1) * r)


def verify_phi_homomorphism(p, n, r=1):
    """
    Symbolic checks over F_p[l, x, y]: the image of a generic point satisfies
    F_n exactly as F_(n+1) of the source, and phi_n(x + y) = phi_n(x) + phi_n(y).

    Returns:
        bool: True when both identities hold
    """
    ctx = FieldContext(p, 1, r)
    source, target, forms = phi_forms(ctx, n)
    xs = [f"{name}_x" for name in source.coordinates]
    ys = [f"{name}_y" for name in source.coordinates]
    R = SymbolicRing(p, r, xs + ys)
    x = dict(zip(source.coordinates, (R.var(v) for v in xs)))
    y = dict(zip(source.coordinates, (R.var(v) for v in ys)))
    xy = {k: x[k] + y[k] for k in x}

    image = {name: R.evaluate(F, x) for name, F in forms.items()}
    if R.evaluate(target.equations[0], image) != R.evaluate(source.equations[0], x):
        logger.warning(f"phi_{n} does not carry F_{n + 1} to F_{n} for p={p}, r={r}")
        return False
    for name, F in forms.items():
        if R.evaluate(F, xy) != R.evaluate(F, x) + R.evaluate(F, y):
            logger.warning(f"phi_{n} coordinate {name} is not additive")
            return False
    return True


def verify_hom_chi_pullback(n, p=2, r=1):
    """
    Each coordinate character of V_n pulls back along phi_n to a
    K-combination of p-th powers of coordinates of V_(n+1).

    X pulls back to X, which becomes X^p + sum l^f X_f^(p^(n+1)) after adding
    the defining equation of V_(n+1); Z_g is already a sum of p-th powers.

    Returns:
        bool: True when every pull-back has only terms of Frobenius degree >= 1
    """
    ctx = FieldContext(p, 1, r)
    source, _, forms = phi_forms(ctx, n)
    F = source.equations[0]
    for name, form in forms.items():
        linear = form.coefficient('X', 0)
        pulled = form if linear.is_zero() else form - F.scale(linear / F.coefficient('X', 0))
        if any(t.d < 1 for t in pulled.terms):
            logger.warning(f"pull-back of {name} along phi_{n} keeps a linear term")
            return False
        logger.debug(f"pull-back of {name}: {pulled.to_expr()}")
    return True


def kernel_summary(ctx, n):
    """JSON-ready list of kernel classes with their Weil alpha_p equations."""
    equations = kernel_equations(ctx, n)[1:]
    return {
        'n': n,
        'count': len(equations),
        'expected': kernel_count(ctx.p, n, ctx.r),
        'equations': [F.to_expr() for F in equations],
    }
