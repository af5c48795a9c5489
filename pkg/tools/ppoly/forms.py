"""
p-Polynomial Forms Module

Additive forms F = sum c * X_var^(p^d) over the current field, their
principal parts and the parser that reads them from expression text.
"""

import logging
import re
from dataclasses import dataclass

from tools.field.element import KElement
from tools.field.expression import evaluate, field_names, parse
from tools.utils.error_utils import ArityMismatch, ExpressionError, MalformedForm

logger = logging.getLogger(__name__)

COORDINATE_NAME = re.compile(r"^[XYZ][A-Za-z0-9_]*$")


def natural_key(name):
    """Sort key that orders X2 before X10 and X_1_0 before X_1_1."""
    return [int(part) if part.isdigit() else part for part in re.split(r"(\d+)", name)]


def frobenius_of(value, d, p):
    """value^(p^d) for field elements, rational functions and plain ring elements."""
    if d == 0:
        return value
    if hasattr(value, 'frobenius'):
        return value.frobenius(d)
    return value ** (p ** d)


@dataclass(frozen=True)
class Term:
    """coeff * X_var^(p^d)."""

    coeff: KElement
    var: str
    d: int

    def to_expr(self, p):
        power = p ** self.d
        piece = self.var if power == 1 else f"{self.var}^{power}"
        if self.coeff == 1:
            return piece
        if self.coeff == -1:
            return f"-{piece}"
        return f"({self.coeff.to_expr()})*{piece}"


class PPolynomial:
    """
    A p-polynomial over a field context.

    Terms are kept sorted by (variable position, d). Terms sharing a
    (variable, d) pair are merged by ``canonical``; constructors that take
    raw terms keep them as given so ``principal_part`` can reject forms
    that are not in canonical shape.
    """

    def __init__(self, ctx, variables, terms=()):
        self.ctx = ctx
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise MalformedForm("variable names must be distinct")
        order = {v: i for i, v in enumerate(self.variables)}
        kept = []
        for term in terms:
            if term.var not in order:
                raise MalformedForm(f"term uses {term.var}, which is not a declared variable")
            if term.d < 0:
                raise MalformedForm(f"negative Frobenius exponent on {term.var}")
            ctx.check(term.coeff)
            if not term.coeff.is_zero():
                kept.append(term)
        self.terms = tuple(sorted(kept, key=lambda t: (order[t.var], t.d)))

    @classmethod
    def from_triples(cls, ctx, variables, triples):
        """Canonical form from (coeff, var, d) triples; coefficients may be ints."""
        terms = [Term(c if isinstance(c, KElement) else ctx.const(c), v, d) for c, v, d in triples]
        return cls(ctx, variables, terms).canonical()

    def canonical(self):
        merged = {}
        for term in self.terms:
            key = (term.var, term.d)
            merged[key] = merged[key] + term.coeff if key in merged else term.coeff
        return PPolynomial(self.ctx, self.variables,
                           [Term(c, var, d) for (var, d), c in merged.items()])

    @property
    def p(self):
        return self.ctx.p

    def is_zero(self):
        return not self.terms

    def is_canonical(self):
        keys = [(t.var, t.d) for t in self.terms]
        return len(keys) == len(set(keys))

    def used_variables(self):
        seen = {t.var for t in self.terms}
        return [v for v in self.variables if v in seen]

    def terms_of(self, var):
        return [t for t in self.terms if t.var == var]

    def max_degree(self, var=None):
        ds = [t.d for t in self.terms if var is None or t.var == var]
        return max(ds) if ds else None

    def linear_part(self):
        return [t for t in self.terms if t.d == 0]

    def coefficient(self, var, d):
        for term in self.terms:
            if term.var == var and term.d == d:
                return term.coeff
        return self.ctx.zero()

    # Algebra

    def _check_compatible(self, other):
        if self.variables != other.variables:
            raise MalformedForm("forms over different coordinate lists")

    def __add__(self, other):
        self._check_compatible(other)
        return PPolynomial(self.ctx, self.variables, self.terms + other.terms).canonical()

    def __neg__(self):
        return PPolynomial(self.ctx, self.variables, [Term(-t.coeff, t.var, t.d) for t in self.terms])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return PPolynomial(self.ctx, self.variables, [Term(c * t.coeff, t.var, t.d) for t in self.terms])

    def frobenius(self, e=1):
        """F^(p^e): every coefficient is raised and every exponent shifted by e."""
        return PPolynomial(self.ctx, self.variables,
                           [Term(t.coeff.frobenius(e), t.var, t.d + e) for t in self.terms])

    def with_variables(self, variables):
        return PPolynomial(self.ctx, variables, self.terms)

    def restrict(self, keep):
        """Drop every term whose variable is not in ``keep`` (sets those coordinates to 0)."""
        keep = set(keep)
        return PPolynomial(self.ctx, self.variables, [t for t in self.terms if t.var in keep])

    def lift(self, ctx):
        return PPolynomial(ctx, self.variables, [Term(ctx.lift(t.coeff), t.var, t.d) for t in self.terms])

    def __eq__(self, other):
        if not isinstance(other, PPolynomial):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return a.variables == b.variables and a.terms == b.terms

    def __hash__(self):
        return hash((self.variables, self.canonical().terms))

    # Evaluation

    def _value_map(self, values):
        if isinstance(values, dict):
            missing = [v for v in self.used_variables() if v not in values]
            if missing:
                raise ArityMismatch(f"no value for {', '.join(missing)}")
            return values
        values = list(values)
        if len(values) != len(self.variables):
            raise ArityMismatch(f"expected {len(self.variables)} values, got {len(values)}")
        return dict(zip(self.variables, values))

    def evaluate(self, values, zero=None):
        """
        Evaluate F at a point.

        Args:
            values (dict | list): Coordinate values by name or in variable order.
                KElement, RationalFunctionT or any ring element with a
                ``frobenius`` method or ``**``.
            zero: Value returned for the empty sum (default: 0 of the context)

        Returns:
            Sum of coeff * value^(p^d)
        """
        values = self._value_map(values)
        total = None
        for term in self.terms:
            piece = term.coeff * frobenius_of(values[term.var], term.d, self.p)
            total = piece if total is None else total + piece
        if total is None:
            return self.ctx.zero() if zero is None else zero
        return total

    # Serialization

    def to_expr(self):
        if not self.terms:
            return "0"
        return " + ".join(t.to_expr(self.p) for t in self.terms).replace("+ -", "- ")

    def to_json(self):
        return {'variables': list(self.variables), 'form': self.to_expr()}

    def __str__(self):
        return self.to_expr()

    def __repr__(self):
        return f"PPolynomial({self.to_expr()!r})"


@dataclass(frozen=True)
class PrincipalPart:
    """The top-degree term of every variable occurring in a form."""

    ctx: object
    variables: tuple
    terms: tuple

    @property
    def N(self):
        return max((t.d for t in self.terms), default=0)

    def term_of(self, var):
        for term in self.terms:
            if term.var == var:
                return term
        return None

    def as_ppolynomial(self):
        return PPolynomial(self.ctx, self.variables, self.terms)

    def evaluate(self, values, zero=None):
        return self.as_ppolynomial().evaluate(values, zero)

    def to_expr(self):
        return self.as_ppolynomial().to_expr()


def principal_part(F):
    """
    One maximal-degree term per variable of F.

    Args:
        F (PPolynomial): Nonzero form

    Returns:
        PrincipalPart: The principal part

    Raises:
        MalformedForm: For the zero form or two terms at a variable's top degree
    """
    if F.is_zero():
        raise MalformedForm("the zero form has no principal part")
    terms = []
    for var in F.used_variables():
        own = F.terms_of(var)
        top = max(t.d for t in own)
        leading = [t for t in own if t.d == top]
        if len(leading) > 1:
            raise MalformedForm(f"{var} has {len(leading)} terms of degree p^{top}; merge them first")
        terms.append(leading[0])
    return PrincipalPart(F.ctx, F.variables, tuple(terms))


class LinearForm:
    """
    Intermediate value used while parsing: a scalar plus sum c * X^(p^d).

    Products need one scalar side; division is by scalars only; ``** k``
    on a form with coordinates requires k = p^e and applies Frobenius.
    """

    def __init__(self, ctx, scalar, terms=None):
        self.ctx = ctx
        self.scalar = scalar
        self.terms = dict(terms or {})

    @classmethod
    def constant(cls, value):
        return cls(value.ctx, value)

    @classmethod
    def coordinate(cls, ctx, name):
        return cls(ctx, ctx.zero(), {(name, 0): ctx.one()})

    def is_scalar(self):
        return not self.terms

    def _wrap(self, other):
        if isinstance(other, LinearForm):
            return other
        if isinstance(other, KElement):
            return LinearForm.constant(other)
        if isinstance(other, int):
            return LinearForm.constant(self.ctx.const(other))
        return None

    def __add__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms[key] + c if key in terms else c
        terms = {k: c for k, c in terms.items() if not c.is_zero()}
        return LinearForm(self.ctx, self.scalar + other.scalar, terms)

    __radd__ = __add__

    def __neg__(self):
        return LinearForm(self.ctx, -self.scalar, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def _scaled(self, c):
        terms = {k: c * v for k, v in self.terms.items()}
        return LinearForm(self.ctx, c * self.scalar, {k: v for k, v in terms.items() if not v.is_zero()})

    def __mul__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        if other.is_scalar():
            return self._scaled(other.scalar)
        if self.is_scalar():
            return other._scaled(self.scalar)
        raise MalformedForm("product of two coordinate expressions is not additive",
                            hint="multiply coordinates by field constants only")

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        if not other.is_scalar():
            raise MalformedForm("division by a coordinate expression is not additive")
        return self._scaled(other.scalar.inverse())

    def __pow__(self, k):
        if self.is_scalar():
            return LinearForm.constant(self.scalar ** k)
        p, e = self.ctx.p, 0
        if k < 1:
            raise MalformedForm(f"exponent {k} on a coordinate expression")
        while k % p == 0:
            k //= p
            e += 1
        if k != 1:
            raise MalformedForm("coordinate expressions may only be raised to powers of p",
                                hint=f"use exponents 1, {p}, {p * p}, ...")
        terms = {(var, d + e): c.frobenius(e) for (var, d), c in self.terms.items()}
        return LinearForm(self.ctx, self.scalar.frobenius(e), terms)

    def to_ppolynomial(self, variables):
        if not self.scalar.is_zero():
            raise MalformedForm(f"form has a nonzero constant term {self.scalar.to_expr()}",
                                hint="p-polynomials are homogeneous additive forms")
        terms = [Term(c, var, d) for (var, d), c in self.terms.items()]
        return PPolynomial(self.ctx, variables, terms).canonical()


def parse_ppolynomial(ctx, text, variables=None):
    """
    Parse a p-polynomial such as "-X0 + X0^2 + l1*X1^2".

    Args:
        ctx (FieldContext): Coefficient field
        text (str): Expression in field names and coordinates
        variables (list, optional): Coordinate names in order. When omitted,
            every name starting with X, Y or Z is a coordinate and the list
            is sorted naturally.

    Returns:
        PPolynomial: Canonical form

    Raises:
        ExpressionError: On unknown names or syntax errors
        MalformedForm: On non-additive expressions
    """
    names = field_names(ctx)
    declared = list(variables) if variables is not None else None
    found = set()

    def resolve(name):
        if name in names:
            return LinearForm.constant(names[name])
        if (declared is not None and name in declared) or (declared is None and COORDINATE_NAME.match(name)):
            found.add(name)
            return LinearForm.coordinate(ctx, name)
        known = sorted(names) + (declared or ['X0', 'X1', '...'])
        raise ExpressionError(f"unknown name {name!r}", hint=f"known names: {', '.join(known)}")

    tree = parse(text, list(names) + (declared or []))
    value = evaluate(tree, resolve, lambda k: LinearForm.constant(ctx.const(k)))
    if isinstance(value, KElement):
        value = LinearForm.constant(value)
    order = declared if declared is not None else sorted(found, key=natural_key)
    form = value.to_ppolynomial(order)
    logger.debug(f"Parsed p-polynomial in {len(order)} coordinates with {len(form.terms)} terms")
    return form
