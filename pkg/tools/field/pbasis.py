"""
p-Basis Module

Frobenius powers, expansions on the p-basis monomials l^f and p-th roots.
"""

import logging
from dataclasses import dataclass, field

from tools.field.element import KElement
from tools.field.indices import lam_power
from tools.utils.error_utils import NotAPthPower, UnsupportedTower

logger = logging.getLogger(__name__)


@dataclass
class PBasisExpansion:
    """x = sum_f l^f c_f^(p^n); ``coefficients`` holds the nonzero c_f."""

    ctx: object
    level: int
    coefficients: dict = field(default_factory=dict)

    def coefficient(self, f):
        return self.coefficients.get(tuple(f), self.ctx.zero())

    def support(self):
        return sorted(self.coefficients)

    def to_json(self):
        return {','.join(map(str, f)): c.to_expr() for f, c in sorted(self.coefficients.items())}


def frobenius(x, d=1):
    """
    Return x^(p^d).

    Args:
        x (KElement): Element
        d (int): Number of Frobenius steps

    Returns:
        KElement: x^(p^d)
    """
    return x.frobenius(d)


def pbasis_expand(x, n):
    """
    Expand x on the level-n p-basis.

    Args:
        x (KElement): Element of any tower level
        n (int): Positive level

    Returns:
        PBasisExpansion: The unique coordinates

    Raises:
        UnsupportedTower: If a level has no expansion routine
    """
    if n < 1:
        raise ValueError(f"expansion level must be positive, got {n}")
    level = x.ctx.top
    if not hasattr(level, 'expand'):
        raise UnsupportedTower(f"no p-basis expansion for {type(level).__name__}")
    raw = level.expand(x.data, n)
    return PBasisExpansion(x.ctx, n, {f: KElement(x.ctx, c) for f, c in raw.items()})


def reconstruct(expansion):
    total = expansion.ctx.zero()
    for f, c in expansion.coefficients.items():
        total = total + lam_power(expansion.ctx, f) * c.frobenius(expansion.level)
    return total


def try_pth_root(x):
    """The p-th root of x in its tower, or None when x is not a p-th power."""
    expansion = pbasis_expand(x, 1)
    zero_index = (0,) * x.ctx.r
    if any(f != zero_index for f in expansion.coefficients):
        return None
    return expansion.coefficient(zero_index)


def pth_root(x):
    root = try_pth_root(x)
    if root is None:
        raise NotAPthPower(f"{x.to_expr()} is not a p-th power")
    return root


def is_pth_power(x):
    return try_pth_root(x) is not None
