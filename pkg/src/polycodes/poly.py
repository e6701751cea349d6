"""Univariate polynomials over a Galois ring or its residue field.

Coefficients are stored ascending (index = degree) with trailing zeros
trimmed; the zero polynomial has an empty coefficient tuple.  The same
class serves both coefficient domains, since ring and field elements share
one arithmetic surface.  Division requires a unit leading coefficient,
gcd/xgcd require a field.
"""

from __future__ import annotations

from typing import Sequence

from .errors import PreconditionError
from .rings import FieldElement, GaloisRing, ResidueField, RingElement


class Polynomial:
    __slots__ = ("parent", "coeffs")

    def __init__(self, parent, coeffs: Sequence):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.parent = parent
        self.coeffs = tuple(cs)

    @classmethod
    def from_ints(cls, parent, ints: Sequence[int | Sequence[int]]) -> Polynomial:
        return cls(parent, [parent.element(c) for c in ints])

    @classmethod
    def x_power(cls, parent, k: int) -> Polynomial:
        return cls(parent, [parent.zero] * k + [parent.one])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.parent.one

    def leading(self):
        if self.is_zero():
            raise PreconditionError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.parent.zero

    def padded(self, n: int) -> list:
        return [self.coeff(i) for i in range(n)]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.parent, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.parent, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> Polynomial:
        return Polynomial(self.parent, [-c for c in self.coeffs])

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (RingElement, FieldElement)):
            return Polynomial(self.parent, [c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Polynomial(self.parent, [])
        out = [self.parent.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a.is_zero():
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Polynomial(self.parent, out)

    def __pow__(self, e: int) -> Polynomial:
        result = Polynomial(self.parent, [self.parent.one])
        acc = self
        while e:
            if e & 1:
                result = result * acc
            acc = acc * acc
            e >>= 1
        return result

    def divmod(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Quotient and remainder; the divisor needs a unit leading coefficient."""
        if other.is_zero():
            raise PreconditionError("polynomial division by zero")
        lead = other.leading()
        if not (lead == self.parent.one or lead.is_unit()):
            raise PreconditionError("division requires a unit leading coefficient")
        inv = lead.inverse()
        rem = list(self.coeffs)
        d = other.degree
        quot = [self.parent.zero] * max(0, len(rem) - d)
        for i in range(len(rem) - d - 1, -1, -1):
            c = rem[i + d] * inv
            if not c.is_zero():
                quot[i] = c
                for j in range(d + 1):
                    rem[i + j] = rem[i + j] - c * other.coeffs[j]
        return Polynomial(self.parent, quot), Polynomial(self.parent, rem[:d])

    def __mod__(self, other: Polynomial) -> Polynomial:
        return self.divmod(other)[1]

    def __call__(self, x):
        acc = self.parent.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial(self.parent, [self.coeffs[i] * i for i in range(1, len(self.coeffs))])

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        return self * self.leading().inverse()

    # -- field-only ops -----------------------------------------------------

    def gcd(self, other: Polynomial) -> Polynomial:
        if not isinstance(self.parent, ResidueField):
            raise PreconditionError("gcd is defined over the residue field")
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b.monic()
        return a.monic()

    def xgcd(self, other: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
        """(g, s, t) with s*self + t*other = g, g monic."""
        if not isinstance(self.parent, ResidueField):
            raise PreconditionError("xgcd is defined over the residue field")
        zero = Polynomial(self.parent, [])
        one = Polynomial(self.parent, [self.parent.one])
        r0, r1 = self, other
        s0, s1 = one, zero
        t0, t1 = zero, one
        while not r1.is_zero():
            q, rem = r0.divmod(r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        inv = r0.leading().inverse()
        return r0 * inv, s0 * inv, t0 * inv

    def is_squarefree(self) -> bool:
        if not isinstance(self.parent, ResidueField):
            raise PreconditionError("squarefree test is over the residue field")
        return self.gcd(self.derivative()).degree == 0

    # -- lifting / reduction -------------------------------------------------

    def residue(self) -> Polynomial:
        if not isinstance(self.parent, GaloisRing):
            raise PreconditionError("residue applies to ring polynomials")
        return Polynomial(self.parent.residue_field, [c.residue() for c in self.coeffs])

    def lift(self, ring: GaloisRing) -> Polynomial:
        if not isinstance(self.parent, ResidueField):
            raise PreconditionError("lift applies to field polynomials")
        return Polynomial(ring, [ring.lift_field(c) for c in self.coeffs])

    def map_coeffs(self, fn, parent=None) -> Polynomial:
        return Polynomial(parent if parent is not None else self.parent, [fn(c) for c in self.coeffs])

    # -- plumbing -------------------------------------------------------------

    def sort_key(self) -> tuple:
        return (self.degree, tuple(c.int_key() for c in self.coeffs))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.parent == other.parent
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.parent, self.coeffs))

    def pretty(self, var: str = "x") -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            cs = c.pretty() if isinstance(c, RingElement) else str(c.coeffs[0]) if c.field.m == 1 else "(...)"
            if isinstance(c, RingElement) and c.ring.m > 1 and i > 0 and cs != "1":
                cs = f"({cs})"
            if i == 0:
                terms.append(cs)
            else:
                head = "" if cs == "1" else cs
                terms.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"Polynomial[{self.pretty()}]"

    def serialize(self) -> list:
        return [c.serialize() for c in self.coeffs]


def pow_mod(base: Polynomial, e: int, modulus: Polynomial) -> Polynomial:
    result = Polynomial(base.parent, [base.parent.one]) % modulus
    acc = base % modulus
    while e:
        if e & 1:
            result = (result * acc) % modulus
        acc = (acc * acc) % modulus
        e >>= 1
    return result
