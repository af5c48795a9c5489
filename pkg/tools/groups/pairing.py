"""
Pairing Module

The multi-additive map V_(n,l1) x ... x V_(n,lr) -> V_(n,l) sending
(X_i, X_(i,ell)) to Z = prod X_i and, for f in I_n with p not dividing f,

    Z_f = prod_{f(i) = 0} X_i
          * prod_{f(i) != 0} sum_{k < p^v} l_i^k X_(i, u + k p^(n - v))^(p^v)

where v = v_p(f(i)) and u = f(i) / p^v.
"""

import logging
from dataclasses import dataclass, field

from tools.field.indices import p_valuation
from tools.groups.presets import GroupPoint, make_group, vn_indices
from tools.groups.symbolic import FieldAlgebra, SymbolicRing
from tools.utils.error_utils import ArityMismatch, BadIndex
from tools.utils.format_utils import coordinate_name

logger = logging.getLogger(__name__)


def slot_names(i, p, n):
    """Coordinate names of the i-th factor V_(n, l_i): X{i} and X{i}_{ell}."""
    return [f"X{i}"] + [f"X{i}_{ell[0]}" for ell in vn_indices(p, n, 1)]


def slot_values(i, p, n, point):
    """
    Map a point of V_(n, l_i), given in that group's own coordinates, to slot names.

    Args:
        point (dict | list | GroupPoint): X then X_ell in increasing ell
    """
    if isinstance(point, GroupPoint):
        point = [point.values[k] for k in point.group.coordinates]
    names = slot_names(i, p, n)
    if isinstance(point, dict):
        keys = ['X'] + [coordinate_name('X', ell) for ell in vn_indices(p, n, 1)]
        missing = [k for k in keys if k not in point]
        if missing:
            raise ArityMismatch(f"slot {i} is missing {', '.join(missing)}")
        return {name: point[key] for name, key in zip(names, keys)}
    point = list(point)
    if len(point) != len(names):
        raise ArityMismatch(f"slot {i} needs {len(names)} coordinates, got {len(point)}")
    return dict(zip(names, point))


@dataclass
class PairingOutput:
    """Z and Z_f for f in I_n with p not dividing f."""

    Z: object
    Z_f: dict = field(default_factory=dict)

    def as_values(self):
        values = {'X': self.Z}
        values.update({coordinate_name('X', f): z for f, z in self.Z_f.items()})
        return values

    def to_point(self, ctx, n):
        return GroupPoint(make_group('Vn', ctx, n=n), self.as_values())

    def to_json(self):
        out = {'Z': str(self.Z)}
        out.update({coordinate_name('X', f): str(z) for f, z in self.Z_f.items()})
        return out


def _slot_factor(algebra, i, a, p, n, values):
    if a == 0:
        return values[f"X{i}"]
    v = p_valuation(a, p)
    u = a // p ** v
    step = p ** (n - v)
    total = algebra.zero()
    for k in range(p ** v):
        ell = u + k * step
        name = f"X{i}_{ell}"
        if name not in values:
            raise BadIndex(f"no coordinate X_({i},{ell}) in V_(n, l{i})")
        total = total + algebra.lam(i) ** k * algebra.frobenius(values[name], v)
    return total


def build_pairing(algebra, n, inputs):
    """
    Evaluate the pairing.

    Args:
        algebra (FieldAlgebra | SymbolicRing): Value arithmetic
        n (int): Level
        inputs (list): One dict per slot i = 1..r keyed by ``slot_names``

    Returns:
        PairingOutput: Z and every Z_f
    """
    p, r = algebra.p, len(inputs)
    values = {}
    for i, slot in enumerate(inputs, start=1):
        expected = slot_names(i, p, n)
        if sorted(slot) != sorted(expected):
            raise ArityMismatch(f"slot {i} needs coordinates {', '.join(expected)}")
        values.update(slot)
    Z = algebra.one()
    for i in range(1, r + 1):
        Z = Z * values[f"X{i}"]
    Z_f = {}
    for f in vn_indices(p, n, r):
        product = algebra.one()
        for i, a in enumerate(f, start=1):
            product = product * _slot_factor(algebra, i, a, p, n, values)
        Z_f[f] = product
    logger.debug(f"pairing at level {n} with {r} slots: {len(Z_f)} coordinates Z_f")
    return PairingOutput(Z, Z_f)


def pair_points(ctx, n, points):
    """The pairing of concrete points of V_(n, l_i), returned as a point of V_(n, l)."""
    inputs = [slot_values(i, ctx.p, n, point) for i, point in enumerate(points, start=1)]
    return build_pairing(FieldAlgebra(ctx), n, inputs).to_point(ctx, n)


def symbolic_inputs(R, n, r, suffix=''):
    """Generic slot inputs over a SymbolicRing whose names come from ``pairing_ring``."""
    return [{name: R.var(name + suffix) for name in slot_names(i, R.p, n)} for i in range(1, r + 1)]


def pairing_ring(p, n, r, copies=('',), root_level=0):
    names = [name + suffix for suffix in copies for i in range(1, r + 1) for name in slot_names(i, p, n)]
    return SymbolicRing(p, r, names, root_level=root_level)


def pairing_multiadditivity(p, n, r):
    """
    Check b(.., x_i + x_i', ..) = b(.., x_i, ..) + b(.., x_i', ..) for every slot
    as a free polynomial identity.

    Returns:
        bool: True when every slot is additive
    """
    R = pairing_ring(p, n, r, copies=('', 'q'))
    base = symbolic_inputs(R, n, r)
    other = symbolic_inputs(R, n, r, suffix='q')
    for i in range(r):
        left, right, summed = list(base), list(base), list(base)
        right[i] = other[i]
        summed[i] = {k: base[i][k] + other[i][k] for k in base[i]}
        a, b, c = (build_pairing(R, n, inputs) for inputs in (left, right, summed))
        if c.Z != a.Z + b.Z or any(c.Z_f[f] != a.Z_f[f] + b.Z_f[f] for f in c.Z_f):
            logger.warning(f"pairing is not additive in slot {i + 1} (p={p}, n={n}, r={r})")
            return False
    return True
