"""
Expression Module

Front end for the textual grammar shared by the CLI, the Flask service and
the test fixtures: integers, names, + - * / ^ ** and parentheses. Text is
read by sympy's ``parse_expr`` without evaluation, so the tree keeps the
input's structure; ``evaluate`` folds it into any value type with ring
operators (KElement, RationalFunctionT, linear forms over coordinates).
"""

import logging
from functools import reduce
from operator import add, mul

from sympy import Add, Basic, Float, Integer, Mul, Pow, Rational, Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from tools.field.context import FieldContext
from tools.field.element import KElement
from tools.field.ratfunc import RationalFunctionT
from tools.utils.error_utils import BadParams, ExpressionError

logger = logging.getLogger(__name__)

TRANSFORMATIONS = standard_transformations + (convert_xor,)

# Only the constructors parse_expr emits; every other name becomes a Symbol.
_PARSER_GLOBALS = {
    'Add': Add, 'Mul': Mul, 'Pow': Pow, 'Symbol': Symbol,
    'Integer': Integer, 'Rational': Rational, 'Float': Float,
}


def parse(text, names=()):
    """
    Parse text into an unevaluated sympy expression.

    Args:
        text (str): Expression text
        names (iterable): Names expected in the text, bound to Symbols

    Returns:
        sympy.Basic: Expression tree

    Raises:
        ExpressionError: On syntax errors or input outside the grammar
    """
    text = str(text)
    if not text.strip():
        raise ExpressionError("empty expression", hint='use "0" for zero')
    symbols = {name: Symbol(name) for name in names}
    try:
        expr = parse_expr(text, local_dict=symbols, global_dict=dict(_PARSER_GLOBALS),
                          transformations=TRANSFORMATIONS, evaluate=False)
    except Exception as ex:
        raise ExpressionError(f"cannot parse {text!r}: {type(ex).__name__}") from ex
    if not isinstance(expr, Basic):
        raise ExpressionError(f"{text!r} is not an expression")
    return expr


def _exponent(expr):
    if not expr.is_Integer:
        expr = expr.doit()
    if not expr.is_Integer:
        raise ExpressionError(f"exponents must be integers, got {expr}")
    return int(expr)


def evaluate(expr, resolve, const):
    """
    Fold a parsed expression into values.

    Args:
        expr (sympy.Basic): Tree from ``parse``
        resolve (callable): name -> value, raising ExpressionError when unknown
        const (callable): int -> value

    Returns:
        The value of the expression
    """
    try:
        return _fold(expr, resolve, const)
    except ZeroDivisionError as ex:
        raise ExpressionError("division by zero in expression") from ex


def _fold(expr, resolve, const):
    if not isinstance(expr, Basic):
        raise ExpressionError(f"unsupported term {expr!r}")
    if expr.is_Symbol:
        return resolve(expr.name)
    if expr.is_Integer:
        n = int(expr)
        return const(n) if n >= 0 else -const(-n)
    if expr.is_Rational:
        return const(int(expr.p)) / const(int(expr.q))
    if expr.is_Add:
        return reduce(add, (_fold(arg, resolve, const) for arg in expr.args))
    if expr.is_Mul:
        numerators, denominators = [], []
        for arg in expr.args:
            if arg.is_Pow and arg.exp.is_Integer and arg.exp < 0:
                denominators.append(_fold(arg.base, resolve, const) ** int(-arg.exp))
            else:
                numerators.append(_fold(arg, resolve, const))
        value = reduce(mul, numerators) if numerators else const(1)
        for den in denominators:
            value = value / den
        return value
    if expr.is_Pow:
        k = _exponent(expr.exp)
        base = _fold(expr.base, resolve, const)
        return base ** k if k >= 0 else const(1) / base ** -k
    raise ExpressionError(f"unsupported term {expr}", hint="allowed: integers, names, + - * / ^ ( )")


def field_names(ctx):
    names = {f"l{i}": ctx.lam(i) for i in range(1, ctx.r + 1)}
    if ctx.e > 1:
        base = ctx.base
        names['w'] = ctx.base_constant((base.w, base.ring.one))
    for label in ctx.generator_names():
        names[label] = ctx.generator(label)
    return names


def _resolver(names, ctx):
    def resolve(name):
        if name not in names:
            raise ExpressionError(
                f"unknown name {name!r}",
                hint=f"known names: {', '.join(sorted(names))} (field p={ctx.p}, e={ctx.e}, r={ctx.r})")
        return names[name]
    return resolve


def parse_element(ctx, text):
    """
    Parse an element of the current tower, e.g. "(l1^2 + l1*l2)/(l2 + 1)".

    Args:
        ctx (FieldContext): Field to parse into
        text (str): Expression in l1..lr, w and generator labels

    Returns:
        KElement: Parsed element
    """
    if isinstance(text, KElement):
        return ctx.lift(text)
    names = field_names(ctx)
    return evaluate(parse(text, names), _resolver(names, ctx), ctx.const)


def parse_rational(ctx, text):
    """Parse an element of K(T); the curve variable is T."""
    if isinstance(text, RationalFunctionT):
        return text.lift(ctx)
    names = {name: RationalFunctionT.constant(value) for name, value in field_names(ctx).items()}
    names['T'] = RationalFunctionT.t(ctx)
    return evaluate(parse(text, names), _resolver(names, ctx), lambda k: RationalFunctionT.constant(ctx.const(k)))


def parse_field(spec):
    """
    Build a base context from "p,e,r" text or a mapping with p, e, r.

    Raises:
        BadParams: On malformed or invalid parameters
    """
    if isinstance(spec, dict):
        values = [spec.get('p'), spec.get('e', 1), spec.get('r', 1)]
    else:
        values = str(spec).split(',')
        if len(values) == 2:
            values.append(1)
    try:
        p, e, r = (int(v) for v in values)
    except (TypeError, ValueError) as ex:
        raise BadParams(f"field must be 'p,e,r', got {spec!r}") from ex
    return FieldContext(p, e, r)


def context_from_json(data):
    """
    Rebuild a context from ``FieldContext.describe()`` output.

    Constants are re-parsed level by level, so the result equals the
    described context.
    """
    ctx = parse_field(data)
    for record in data.get('adjunctions', []):
        constant = parse_element(ctx, record['constant'])
        ctx = ctx.child(record['kind'], int(record['degree']), constant)
        expected = record.get('label')
        if expected and ctx.adjunctions[-1].label != expected:
            raise BadParams(f"adjunction label {expected} does not match position")
    logger.debug(f"Rebuilt context with {len(ctx.adjunctions)} adjunctions")
    return ctx
