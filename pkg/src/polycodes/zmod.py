"""Plain modular-integer arithmetic Z_M for composite M.

A deliberately narrow backend: the root-of-unity invertibility check is
meaningful over any commutative ring, and its standard counterexample
lives in Z_15, which is not local.  Nothing else in the package accepts
composite moduli.
"""

from __future__ import annotations

from math import gcd

from .errors import PreconditionError


class ZModElement:
    __slots__ = ("ring", "value")

    def __init__(self, ring: IntegersMod, value: int):
        self.ring = ring
        self.value = value % ring.modulus

    def is_zero(self) -> bool:
        return self.value == 0

    def is_unit(self) -> bool:
        return gcd(self.value, self.ring.modulus) == 1

    def __add__(self, other):
        return ZModElement(self.ring, self.value + other.value)

    def __sub__(self, other):
        return ZModElement(self.ring, self.value - other.value)

    def __neg__(self):
        return ZModElement(self.ring, -self.value)

    def __mul__(self, other):
        if isinstance(other, int):
            return ZModElement(self.ring, self.value * other)
        return ZModElement(self.ring, self.value * other.value)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return ZModElement(self.ring, pow(self.value, e, self.ring.modulus))

    def __eq__(self, other) -> bool:
        return isinstance(other, ZModElement) and self.ring == other.ring and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.ring.modulus, self.value))

    def serialize(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.ring.modulus})"


class IntegersMod:
    """Z_M with the minimal element interface used by the DFT check."""

    def __init__(self, modulus: int):
        if modulus < 2:
            raise PreconditionError("modulus must be at least 2")
        self.modulus = modulus
        self.zero = ZModElement(self, 0)
        self.one = ZModElement(self, 1)

    def element(self, value: int) -> ZModElement:
        if not isinstance(value, int):
            raise PreconditionError("Z_M elements are plain integers")
        return ZModElement(self, value)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntegersMod) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(("IntegersMod", self.modulus))

    def __repr__(self) -> str:
        return f"Z_{self.modulus}"
