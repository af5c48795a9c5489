"""
Group Presets Module

Explicit unipotent groups cut out by p-polynomial equations, selected by
name through ``make_group``. Points are exact solutions over the current
tower or over K(T).
"""

import logging
from dataclasses import dataclass, field

from tools.field.adjoin import adjoin_artin_schreier
from tools.field.indices import index_set, is_zero_mod_p, lam_power, p_valuation
from tools.groups.symbolic import SymbolicRing
from tools.ppoly.forms import PPolynomial, Term
from tools.utils.error_utils import ArityMismatch, BadParams, NotAMember
from tools.utils.format_utils import coordinate_name

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupPresentation:
    """
    A group {x : F(x) = 0 for every equation F}.

    Attributes:
        name (str): Preset name
        ctx (FieldContext): Field of definition
        coordinates (tuple): Coordinate names in order
        equations (tuple): PPolynomials over ``coordinates``
        params (dict): Preset parameters (n, s, ...)
    """

    name: str
    ctx: object
    coordinates: tuple
    equations: tuple
    params: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def dimension_bound(self):
        return len(self.coordinates)

    def lift(self, ctx):
        return GroupPresentation(self.name, ctx, self.coordinates,
                                 tuple(F.lift(ctx) for F in self.equations), self.params)

    def values_map(self, values):
        if isinstance(values, dict):
            unknown = [k for k in values if k not in self.coordinates]
            if unknown or len(values) != len(self.coordinates):
                raise ArityMismatch(f"{self.name} has coordinates {', '.join(self.coordinates)}")
            return values
        values = list(values)
        if len(values) != len(self.coordinates):
            raise ArityMismatch(f"{self.name} has {len(self.coordinates)} coordinates, got {len(values)}")
        return dict(zip(self.coordinates, values))

    def residuals(self, values):
        values = self.values_map(values)
        return [F.evaluate(values) for F in self.equations]

    def to_json(self):
        return {
            'name': self.name,
            'params': dict(self.params),
            'coordinates': list(self.coordinates),
            'equations': [F.to_expr() for F in self.equations],
        }


def membership(G, values):
    """
    Whether values satisfy every defining equation exactly.

    Args:
        G (GroupPresentation): Group
        values (dict | list): Coordinate values (KElement or RationalFunctionT)

    Returns:
        bool: True for points of G

    Raises:
        ArityMismatch: When the number or names of coordinates differ
    """
    return all(r.is_zero() for r in G.residuals(values))


@dataclass
class GroupPoint:
    group: GroupPresentation
    values: dict

    def __post_init__(self):
        self.values = self.group.values_map(self.values)
        if not membership(self.group, self.values):
            raise NotAMember(f"point is not on {self.group.name}")

    def __add__(self, other):
        if other.group.coordinates != self.group.coordinates:
            raise ArityMismatch("points of different groups")
        return GroupPoint(self.group, {k: self.values[k] + other.values[k] for k in self.group.coordinates})

    def to_json(self):
        return {k: v.to_expr() for k, v in self.values.items()}


# Presets

def _lam_term(ctx, f, var, d, sign=1):
    return Term(ctx.const(sign) * lam_power(ctx, f), var, d)


def v_group(ctx):
    """-X0 + sum_{f in I_1} l^f X_f^p, the f = 0 coordinate being X0 itself."""
    p, r = ctx.p, ctx.r
    names = {f: 'X0' if not any(f) else coordinate_name('X', f) for f in index_set(p, 1, r)}
    terms = [Term(-ctx.one(), 'X0', 0)] + [_lam_term(ctx, f, names[f], 1) for f in index_set(p, 1, r)]
    coordinates = tuple(names[f] for f in index_set(p, 1, r))
    return coordinates, [PPolynomial(ctx, coordinates, terms).canonical()]


def vn_indices(p, n, r):
    return [f for f in index_set(p, n, r) if not is_zero_mod_p(f, p)]


def vn_group(ctx, n, lam_index=None):
    """
    -X + X^p + sum_{f in I_n, p does not divide f} l^f X_f^(p^n).

    With ``lam_index`` = i the group is the one-parameter version in l_i alone.
    """
    p = ctx.p
    r = 1 if lam_index else ctx.r
    indices = vn_indices(p, n, r)
    coordinates = ('X',) + tuple(coordinate_name('X', f) for f in indices)
    terms = [Term(-ctx.one(), 'X', 0), Term(ctx.one(), 'X', 1)]
    for f, name in zip(indices, coordinates[1:]):
        coeff = ctx.lam(lam_index) ** f[0] if lam_index else lam_power(ctx, f)
        terms.append(Term(coeff, name, n))
    return coordinates, [PPolynomial(ctx, coordinates, terms)]


def j_indices(p, s, r):
    """J_s: f in I_s with p not dividing f and f(i) != 0 for some i >= 2."""
    return [f for f in index_set(p, s, r) if not is_zero_mod_p(f, p) and any(f[1:])]


def ws_group(ctx, s):
    """-X0 + X0^p + sum_{f in J_s} l^f X_f^(p^s)."""
    if ctx.r < 2:
        raise BadParams("W_s needs a p-basis with at least two elements", hint="use --field p,e,r with r >= 2")
    indices = j_indices(ctx.p, s, ctx.r)
    coordinates = ('X0',) + tuple(coordinate_name('X', f) for f in indices)
    terms = [Term(-ctx.one(), 'X0', 0), Term(ctx.one(), 'X0', 1)]
    terms += [_lam_term(ctx, f, coordinate_name('X', f), s) for f in indices]
    return coordinates, [PPolynomial(ctx, coordinates, terms)]


def ord_tail(f, p):
    """ord_p of f restricted to slots 2..r."""
    return min(p_valuation(a, p) for a in f[1:] if a)


def nprime_correction(ctx, s):
    """
    X0^(p^(s-1)) + sum_{f in J_s} sum_{d=1}^{ord} l^(f p^(s-1-d)) X_f^(p^(2s-1-d)).
    """
    p = ctx.p
    coordinates, _ = ws_group(ctx, s)
    terms = [Term(ctx.one(), 'X0', s - 1)]
    for f in j_indices(p, s, ctx.r):
        for d in range(1, ord_tail(f, p) + 1):
            exponent = tuple(a * p ** (s - 1 - d) for a in f)
            terms.append(_lam_term(ctx, exponent, coordinate_name('X', f), 2 * s - 1 - d))
    return PPolynomial(ctx, coordinates, terms)


def nprime_group(ctx, s):
    coordinates, equations = ws_group(ctx, s)
    return coordinates, equations + [nprime_correction(ctx, s)]


def uprime_group(ctx, s):
    """
    One equation per h in I_(s-1):
    b_(ph) = sum_{g in I_s, g = h mod p^(s-1)} l^((g - h)/p^(s-1)) b_g^p.
    """
    p, r = ctx.p, ctx.r
    indices = index_set(p, s, r)
    coordinates = tuple(coordinate_name('X', g) for g in indices)
    step = p ** (s - 1)
    equations = []
    for h in index_set(p, s - 1, r):
        ph = tuple(p * a for a in h)
        terms = [Term(-ctx.one(), coordinate_name('X', ph), 0)]
        for g in indices:
            if all((a - b) % step == 0 for a, b in zip(g, h)):
                terms.append(_lam_term(ctx, tuple((a - b) // step for a, b in zip(g, h)),
                                       coordinate_name('X', g), 1))
        equations.append(PPolynomial(ctx, coordinates, terms).canonical())
    return coordinates, equations


def weil_alphap_group(ctx):
    """sum_{f in I_1} l^f X_f^p = 0."""
    indices = index_set(ctx.p, 1, ctx.r)
    coordinates = tuple(coordinate_name('X', f) for f in indices)
    terms = [_lam_term(ctx, f, name, 1) for f, name in zip(indices, coordinates)]
    return coordinates, [PPolynomial(ctx, coordinates, terms)]


def weil_gm_group(ctx):
    """X_(p-1) = sum_{j=0}^{p-1} l1^j X_j^p."""
    p = ctx.p
    coordinates = tuple(f"X{j}" for j in range(p))
    terms = [Term(-ctx.one(), f"X{p - 1}", 0)] + [Term(ctx.lam(1) ** j, f"X{j}", 1) for j in range(p)]
    return coordinates, [PPolynomial(ctx, coordinates, terms).canonical()]


PRESETS = ('V', 'Vn', 'U', 'Ws', 'Uprime', 'Nprime', 'weil_alphap', 'weil_gm')


def _positive(params, key):
    value = params.get(key)
    try:
        value = int(value)
    except (TypeError, ValueError) as ex:
        raise BadParams(f"parameter {key} is required and must be an integer") from ex
    if value < 1:
        raise BadParams(f"parameter {key} must be at least 1, got {value}")
    return value


def make_group(preset, ctx, **params):
    """
    Build a preset presentation.

    Args:
        preset (str): One of PRESETS
        ctx (FieldContext): Field; p and r come from it
        **params: n for Vn, s for Ws, Uprime and Nprime, lam_index for Vn

    Returns:
        GroupPresentation: The presentation

    Raises:
        BadParams: For unknown presets or invalid parameters
    """
    if preset in ('V', 'U'):
        coordinates, equations = v_group(ctx)
        used = {}
    elif preset == 'Vn':
        n = _positive(params, 'n')
        lam_index = params.get('lam_index')
        if lam_index is not None and not 1 <= int(lam_index) <= ctx.r:
            raise BadParams(f"lam_index must be between 1 and {ctx.r}")
        coordinates, equations = vn_group(ctx, n, int(lam_index) if lam_index else None)
        used = {'n': n, 'lam_index': lam_index} if lam_index else {'n': n}
    elif preset in ('Ws', 'Uprime', 'Nprime'):
        s = _positive(params, 's')
        builder = {'Ws': ws_group, 'Uprime': uprime_group, 'Nprime': nprime_group}[preset]
        coordinates, equations = builder(ctx, s)
        used = {'s': s}
    elif preset == 'weil_alphap':
        coordinates, equations = weil_alphap_group(ctx)
        used = {}
    elif preset == 'weil_gm':
        coordinates, equations = weil_gm_group(ctx)
        used = {}
    else:
        logger.error(f"Unsupported group preset: {preset}")
        raise BadParams(f"unknown group preset {preset!r}", hint=f"presets: {', '.join(PRESETS)}")
    logger.debug(f"Built {preset} with {len(coordinates)} coordinates and {len(equations)} equations")
    return GroupPresentation(preset, ctx, tuple(coordinates), tuple(equations),
                             dict(used, p=ctx.p, r=ctx.r))


def _artin_schreier_variable(F):
    """The coordinate D with F = -D + D^p + (terms in other coordinates), or None."""
    for var in F.used_variables():
        own = F.terms_of(var)
        if len(own) == 2 and own[0].d == 0 and own[1].d == 1 and own[0].coeff == -1 and own[1].coeff == 1:
            return var
    return None


def random_point(G, rng, height=2):
    """
    A point with random free coordinates and an Artin-Schreier solved coordinate.

    Args:
        G (GroupPresentation): Group with a single equation of the form -D + D^p + ...
        rng (random.Random): Seeded generator
        height (int): Degree bound for the random coordinates

    Returns:
        GroupPoint: A point over G.ctx or over an Artin-Schreier extension of it
    """
    if len(G.equations) != 1 or _artin_schreier_variable(G.equations[0]) is None:
        raise BadParams(f"{G.name} has no Artin-Schreier coordinate to solve for")
    F = G.equations[0]
    solved = _artin_schreier_variable(F)
    ctx = G.ctx
    values = {}
    for name in G.coordinates:
        if name == solved:
            continue
        value = ctx.zero()
        for _ in range(rng.randint(0, 2)):
            term = ctx.const(rng.randrange(1, ctx.p))
            for i in range(1, ctx.r + 1):
                term = term * ctx.lam(i) ** rng.randint(0, height)
            value = value + term
        values[name] = value
    rest = F.restrict(v for v in G.coordinates if v != solved).evaluate(values)
    ctx, root = adjoin_artin_schreier(ctx, -rest)
    lifted = G.lift(ctx) if ctx is not G.ctx else G
    values = {k: ctx.lift(v) for k, v in values.items()}
    values[solved] = root
    return GroupPoint(lifted, values)


def verify_additivity(G):
    """
    Symbolic check that every equation of G is additive: F(x + y) = F(x) + F(y)
    in F_p[l, x, y]. Needs G over the base field F_p(l1..lr).

    Returns:
        bool: True when the point set is closed under coordinatewise addition
    """
    xs = [f"{name}_x" for name in G.coordinates]
    ys = [f"{name}_y" for name in G.coordinates]
    R = SymbolicRing(G.ctx.p, G.ctx.r, xs + ys)
    x = dict(zip(G.coordinates, (R.var(v) for v in xs)))
    y = dict(zip(G.coordinates, (R.var(v) for v in ys)))
    xy = {k: x[k] + y[k] for k in x}
    for F in G.equations:
        if R.evaluate(F, xy) != R.evaluate(F, x) + R.evaluate(F, y):
            logger.warning(f"{G.name}: equation {F.to_expr()} is not additive")
            return False
    return True
