"""
KElement Module

Exact element of the current field tower, carrying its context handle.
"""

from tools.utils.error_utils import ContextMismatch


class KElement:
    __slots__ = ('ctx', 'data')

    def __init__(self, ctx, data):
        self.ctx = ctx
        self.data = data

    @property
    def level(self):
        return self.ctx.top

    def _coerce(self, other):
        if isinstance(other, KElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch("operands live in different field contexts")
            return other.data
        if isinstance(other, int):
            return self.level.from_int(other)
        return None

    def __add__(self, other):
        data = self._coerce(other)
        if data is None:
            return NotImplemented
        return KElement(self.ctx, self.level.add(self.data, data))

    __radd__ = __add__

    def __sub__(self, other):
        data = self._coerce(other)
        if data is None:
            return NotImplemented
        return KElement(self.ctx, self.level.sub(self.data, data))

    def __rsub__(self, other):
        data = self._coerce(other)
        if data is None:
            return NotImplemented
        return KElement(self.ctx, self.level.sub(data, self.data))

    def __neg__(self):
        return KElement(self.ctx, self.level.neg(self.data))

    def __mul__(self, other):
        data = self._coerce(other)
        if data is None:
            return NotImplemented
        return KElement(self.ctx, self.level.mul(self.data, data))

    __rmul__ = __mul__

    def __truediv__(self, other):
        data = self._coerce(other)
        if data is None:
            return NotImplemented
        return KElement(self.ctx, self.level.mul(self.data, self.level.inv(data)))

    def __rtruediv__(self, other):
        data = self._coerce(other)
        if data is None:
            return NotImplemented
        return KElement(self.ctx, self.level.mul(data, self.level.inv(self.data)))

    def __pow__(self, k):
        return KElement(self.ctx, self.level.pow(self.data, k))

    def inverse(self):
        return KElement(self.ctx, self.level.inv(self.data))

    def frobenius(self, d=1):
        return KElement(self.ctx, self.level.frobenius(self.data, d))

    def is_zero(self):
        return self.level.is_zero(self.data)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.data == self.level.from_int(other)
        if not isinstance(other, KElement):
            return NotImplemented
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            return False
        return self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def lift(self, ctx):
        return ctx.lift(self)

    def to_expr(self):
        return self.level.to_expr(self.data)

    def sort_key(self):
        """Canonical-least ordering used for root tie-breaks."""
        text = self.to_expr()
        return (len(text), text)

    def __str__(self):
        return self.to_expr()

    def __repr__(self):
        return f"KElement({self.to_expr()!r})"
