"""
Imprimitivity Module

Degrees of purely inseparable extensions L = K(a_1^(1/p^n_1), ...) of
K = F_q(l1..lr) and of finite reduced algebras over K.

Raising L to the power p^N (N the largest n_j) maps it isomorphically onto
K^(p^N)(b_1, ...) with b_j = a_j^(p^(N - n_j)) in K. Every degree below is
computed there: K is a vector space over K^(p^N) with coordinates given by
the level-N p-basis expansion, and subfields are tracked as echelon spans
of those coordinate vectors.
"""

import logging
from dataclasses import dataclass, field

from tools.field.dense import EchelonBasis
from tools.field.indices import index_set
from tools.field.pbasis import pbasis_expand
from tools.utils.error_utils import ContextMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PureInsepExtension:
    """
    K(a_1^(1/p^n_1), ..., a_k^(1/p^n_k)) over the context of its generators.

    Attributes:
        ctx (FieldContext): Field K
        generators (tuple): (a, n) pairs, a a nonzero KElement and n >= 1
    """

    ctx: object
    generators: tuple = ()

    def __post_init__(self):
        for a, n in self.generators:
            self.ctx.check(a)
            if n < 1:
                raise ValueError(f"root exponent must be positive, got {n}")
            if a.is_zero():
                raise ValueError("generators must be nonzero")

    @classmethod
    def of(cls, ctx, generators):
        return cls(ctx, tuple((a, int(n)) for a, n in generators))

    @property
    def height(self):
        return max((n for _, n in self.generators), default=0)

    def frobenius_image(self):
        """The generators b_j = a_j^(p^(N - n_j)) of the p^N-th power of L."""
        N = self.height
        return [a.frobenius(N - n) for a, n in self.generators]

    def height_one_reduction(self):
        """K L^p, generated by a_j^(1/p^(n_j - 1)); generators with n_j = 1 drop out."""
        return PureInsepExtension(self.ctx, tuple((a, n - 1) for a, n in self.generators if n > 1))

    def to_json(self):
        return {'generators': [{'a': a.to_expr(), 'n': n} for a, n in self.generators]}


@dataclass
class AlgebraDescriptor:
    """A finite reduced K-algebra given as a product of purely inseparable fields."""

    factors: list = field(default_factory=list)

    def __post_init__(self):
        if not self.factors:
            raise ValueError("an algebra needs at least one factor")
        ctx = self.factors[0].ctx
        if any(f.ctx != ctx for f in self.factors):
            raise ContextMismatch("all factors must share one field context")

    def compositum(self):
        generators = tuple(g for factor in self.factors for g in factor.generators)
        return PureInsepExtension(self.factors[0].ctx, generators)


class FrobeniusSpan:
    """
    A subfield K^(p^N)(b_1, ...) of K held as a K^(p^N)-span.

    ``basis`` lists the products of powers of the adjoined elements that
    form a K^(p^N)-basis of the subfield.
    """

    def __init__(self, ctx, level):
        self.ctx = ctx
        self.level = level
        self.indices = index_set(ctx.p, level, ctx.r) if level else ((0,) * ctx.r,)
        self.echelon = EchelonBasis(ctx.top, len(self.indices))
        self.basis = [ctx.one()]
        self.log_degree = 0
        self.echelon.insert(self._coords(ctx.one()))

    def _coords(self, x):
        if self.level == 0:
            return [x.data]
        expansion = pbasis_expand(x, self.level)
        return [expansion.coefficient(f).data for f in self.indices]

    def contains(self, x):
        return self.echelon.contains(self._coords(x))

    def adjoin(self, b):
        """
        Adjoin b; returns t with [F(b) : F] = p^t.

        t is the least exponent with b^(p^t) already in F.
        """
        t, power = 0, b
        while not self.contains(power):
            power = power.frobenius(1)
            t += 1
            if t > self.level:
                raise RuntimeError("b^(p^N) must lie in K^(p^N); the tower lost its p-basis")
        if t == 0:
            return 0
        self.log_degree += t
        old = list(self.basis)
        for i in range(1, self.ctx.p ** t):
            factor = b ** i
            for e in old:
                product = e * factor
                self.basis.append(product)
                self.echelon.insert(self._coords(product))
        logger.debug(f"Adjoined an element of exponent {t}; span rank {self.echelon.rank}")
        return t


def log_degree(ext):
    """
    log_p [L : K].

    Args:
        ext (PureInsepExtension): The extension

    Returns:
        int: Exponent of the degree
    """
    span = FrobeniusSpan(ext.ctx, ext.height)
    for b in ext.frobenius_image():
        span.adjoin(b)
    return span.log_degree


def degree(ext):
    """[L : K] as an integer."""
    return ext.ctx.p ** log_degree(ext)


def is_p_independent(S):
    """
    Whether [K(S^(1/p)) : K] = p^|S|.

    Args:
        S (list): Nonzero KElements of one context

    Returns:
        bool: True for p-independent sets, including the empty set
    """
    S = list(S)
    if not S:
        return True
    ctx = S[0].ctx
    ext = PureInsepExtension.of(ctx, [(s, 1) for s in S])
    return log_degree(ext) == len(S)


def imp(ext):
    """
    Degree of imprimitivity: r with [L : K L^p] = p^r.

    Computed as log_p [L : K] - log_p [K L^p : K].
    """
    if not ext.generators:
        return 0
    value = log_degree(ext) - log_degree(ext.height_one_reduction())
    logger.debug(f"imp of {len(ext.generators)} generators is {value}")
    return value


def imp_algebra(algebra):
    """imp of the compositum of all factors of a reduced algebra."""
    return imp(algebra.compositum())


def _reduction_span(ext):
    """K L^p seen inside the level-N picture: K^(p^N)(b_j^p)."""
    span = FrobeniusSpan(ext.ctx, ext.height)
    for b in ext.frobenius_image():
        span.adjoin(b.frobenius(1))
    return span


def adjunction_answers(ext):
    """
    Walk the chain from K L^p to L one generator at a time.

    Returns:
        list: For each generator, True when its root already lies in the
        field built so far. Every False answer multiplies the degree by p.
    """
    span = _reduction_span(ext)
    answers = []
    for b in ext.frobenius_image():
        present = span.contains(b)
        answers.append(present)
        if not present:
            span.adjoin(b)
    return answers


def min_generating_subset(ext):
    """
    Indices of imp(ext) generators that already generate L over K.

    Greedy over K L^p: a generator is kept when it is not in the field
    generated by K L^p and the generators kept so far. The choice is then
    checked against the degree of L.

    Args:
        ext (PureInsepExtension): The extension

    Returns:
        list: Generator indices in increasing order
    """
    span = _reduction_span(ext)
    chosen = []
    for index, b in enumerate(ext.frobenius_image()):
        if not span.contains(b):
            span.adjoin(b)
            chosen.append(index)
    subset = PureInsepExtension(ext.ctx, tuple(ext.generators[i] for i in chosen))
    if log_degree(subset) != log_degree(ext):
        raise RuntimeError("greedy generators do not span the extension")
    return chosen
