"""Prime fields GF(p) and their elements."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

MAX_MODULUS = 1 << 16


def is_prime(n: int) -> bool:
    """Trial-division primality test (moduli are at most 2^16)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field of integers modulo a prime ``p``.

    Calling the field coerces an integer into a :class:`FieldElement`::

        >>> F = PrimeField(5)
        >>> F(3) + F(4)
        GF(5)(2)
    """

    p: int

    def __post_init__(self):
        p = self.p
        if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
            raise TypeError(f"modulus must be an integer, got {p!r}")
        object.__setattr__(self, "p", int(p))
        if not 2 <= self.p <= MAX_MODULUS:
            raise ValueError(f"modulus must lie in [2, {MAX_MODULUS}], got {self.p}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def __repr__(self):
        return f"GF({self.p})"

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError(f"cannot coerce element of {value.field} into {self}")
            return value
        return FieldElement(int(value) % self.p, self)

    @property
    def order(self) -> int:
        return self.p

    def elements(self) -> list[FieldElement]:
        return [FieldElement(v, self) for v in range(self.p)]

    def inv(self, a: int) -> int:
        """Inverse of a raw residue."""
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        return pow(a, -1, self.p)

    @cached_property
    def inverse_table(self) -> np.ndarray:
        # entry 0 is a placeholder; callers never divide by zero
        table = np.zeros(self.p, dtype=np.int64)
        for a in range(1, self.p):
            table[a] = pow(a, -1, self.p)
        table.setflags(write=False)
        return table

    def reduce(self, values) -> np.ndarray:
        """Canonical residues of an integer array, as int64."""
        return np.mod(np.asarray(values, dtype=np.int64), self.p)

    def dot(self, u, v) -> int:
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        if u.shape != v.shape:
            raise ValueError(f"length mismatch: {u.shape} vs {v.shape}")
        return int(np.dot(u % self.p, v % self.p) % self.p)


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.p:
            object.__setattr__(self, "value", int(self.value) % self.field.p)

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"mixed-field operands: {self.field} and {other.field}")
            return other
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement((self.value + other.value) % self.field.p, self.field)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement((-self.value) % self.field.p, self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement((self.value - other.value) % self.field.p, self.field)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement((self.value * other.value) % self.field.p, self.field)

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        return FieldElement(self.field.inv(self.value), self.field)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldElement(pow(self.value, exponent, self.field.p), self.field)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return self.value == int(other) % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __int__(self):
        return self.value

    __index__ = __int__

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"GF({self.field.p})({self.value})"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def inner_product(
    u: Sequence[FieldElement] | Iterable,
    v: Sequence[FieldElement] | Iterable,
    field: PrimeField | None = None,
) -> FieldElement:
    """Sum of ``u[i] * v[i]`` in GF(p).

    Entries may be :class:`FieldElement` instances, in which case the field
    is inferred, or raw integers together with an explicit ``field``.
    """
    u, v = list(u), list(v)
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    fields = {x.field for x in u + v if isinstance(x, FieldElement)}
    if field is not None:
        fields.add(field)
    if len(fields) > 1:
        raise ValueError(f"mixed-field operands: {sorted(f.p for f in fields)}")
    if not fields:
        raise ValueError("cannot infer the field of integer vectors; pass field=")
    (F,) = fields
    return F(sum(int(a) * int(b) for a, b in zip(u, v)))
