"""
Field Context Module

Immutable description of the ground field F_q(l1, ..., lr) together with its
ordered tower of separable constant adjunctions. Adjoining returns a new
context; the arithmetic levels are built once per context and shared with
its children.
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache

from sympy import isprime

from tools.field.element import KElement
from tools.field.levels import ARTIN_SCHREIER, RADICAL, BaseLevel, ExtensionLevel
from tools.utils.error_utils import BadParams, ContextMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdjunctionRecord:
    """
    One constant adjunction.

    ``constant`` is raw data of the level below: the generator z satisfies
    z^p - z = constant (Artin-Schreier) or z^degree = constant (radical).
    """

    kind: str
    degree: int
    constant: object
    label: str = ''


@lru_cache(maxsize=None)
def _build_levels(p, e, r, adjunctions):
    if not adjunctions:
        return (BaseLevel(p, e, r),)
    below = _build_levels(p, e, r, adjunctions[:-1])
    top = ExtensionLevel(below[-1], adjunctions[-1], len(adjunctions))
    return below + (top,)


@dataclass(frozen=True)
class FieldContext:
    p: int
    e: int = 1
    r: int = 1
    adjunctions: tuple = ()

    def __post_init__(self):
        if not isprime(self.p):
            raise BadParams(f"p must be prime, got {self.p}")
        if self.e < 1:
            raise BadParams(f"e must be positive, got {self.e}")
        if self.r < 1:
            raise BadParams(f"r must be at least 1, got {self.r}")

    @property
    def q(self):
        return self.p ** self.e

    @cached_property
    def levels(self):
        return _build_levels(self.p, self.e, self.r, self.adjunctions)

    @property
    def top(self):
        return self.levels[-1]

    @property
    def base(self):
        return self.levels[0]

    # Element constructors

    def element(self, data):
        return KElement(self, data)

    def zero(self):
        return KElement(self, self.top.zero)

    def one(self):
        return KElement(self, self.top.one)

    def const(self, k):
        return KElement(self, self.top.from_int(k))

    def lam(self, i):
        if not 1 <= i <= self.r:
            raise BadParams(f"l{i} is not a generator of this field (r={self.r})")
        return KElement(self, self.top.lam(i))

    def lams(self):
        return [self.lam(i) for i in range(1, self.r + 1)]

    def generator_names(self):
        return [record.label for record in self.adjunctions]

    def generator(self, label):
        """The adjoined generator with the given label, as an element of this context."""
        for index, record in enumerate(self.adjunctions, start=1):
            if record.label == label:
                data = self.levels[index].gen
                for level in self.levels[index + 1:]:
                    data = level.embed(data)
                return KElement(self, data)
        raise BadParams(f"unknown generator {label}")

    def base_constant(self, data):
        """Embed raw level-0 data into the top level."""
        for level in self.levels[1:]:
            data = level.embed(data)
        return KElement(self, data)

    # Tower management

    def child(self, kind, degree, constant):
        """
        Context with one more adjunction on top.

        Args:
            kind (str): 'artin-schreier' or 'radical'
            degree (int): Degree of the new generator
            constant (KElement): Defining constant, an element of this context

        Returns:
            FieldContext: The extended context
        """
        self.check(constant)
        index = len(self.adjunctions) + 1
        prefix = 'g' if kind == ARTIN_SCHREIER else 'a'
        record = AdjunctionRecord(kind, degree, constant.data, f"{prefix}{index}")
        logger.debug(f"Adjoining {record.label} ({kind}, degree {degree}) over depth {index - 1}")
        return FieldContext(self.p, self.e, self.r, self.adjunctions + (record,))

    def is_extension_of(self, other):
        return ((self.p, self.e, self.r) == (other.p, other.e, other.r)
                and self.adjunctions[:len(other.adjunctions)] == other.adjunctions)

    def lift(self, x):
        """
        Move a value of an ancestor context into this one.

        Args:
            x: KElement or any value with a ``lift`` method

        Returns:
            The same value viewed in this context
        """
        if not isinstance(x, KElement):
            return x.lift(self)
        if x.ctx is self or x.ctx == self:
            return x if x.ctx is self else KElement(self, x.data)
        if not self.is_extension_of(x.ctx):
            raise ContextMismatch("value does not come from a subfield of this context")
        data = x.data
        for level in self.levels[len(x.ctx.adjunctions) + 1:]:
            data = level.embed(data)
        return KElement(self, data)

    def check(self, x):
        if x.ctx is not self and x.ctx != self:
            raise ContextMismatch("value belongs to another field context")

    def describe(self):
        """JSON-ready description; adjunction constants serialized in their own level."""
        adjunctions = []
        for index, record in enumerate(self.adjunctions, start=1):
            below = self.levels[index - 1]
            adjunctions.append({
                'kind': record.kind,
                'degree': record.degree,
                'constant': below.to_expr(record.constant),
                'label': record.label,
            })
        return {'p': self.p, 'e': self.e, 'r': self.r, 'adjunctions': adjunctions}
