"""The quotient ring R[x]/<f> and its matrix representations.

Elements are coefficient vectors of fixed length n = deg f.  The regular
representation sends g to the n x n matrix whose rows are the coefficient
vectors of g, xg, ..., x^{n-1}g; it is a ring isomorphism onto the
centralizer of the companion matrix of f.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import PreconditionError
from .linalg import RingMatrix, row_vector_times
from .poly import Polynomial
from .rings import GaloisRing, RingElement


class AmbientSpace:
    """R[x]/<f> for a monic f of degree n >= 1."""

    def __init__(self, ring: GaloisRing, f: Polynomial):
        if f.parent != ring:
            raise PreconditionError("modulus polynomial is over the wrong ring")
        if f.is_zero() or not f.is_monic() or f.degree < 1:
            raise PreconditionError("ambient modulus must be monic of degree >= 1")
        self.ring = ring
        self.f = f
        self.n = f.degree
        self._companion: RingMatrix | None = None
        self._splittings: dict = {}
        self._idempotents: dict = {}

    @property
    def dim(self) -> int:
        return self.n

    @property
    def order(self) -> int:
        return self.ring.order**self.n

    def element(self, coeffs: Sequence) -> QuotElement:
        cs = [c if isinstance(c, RingElement) else self.ring.element(c) for c in coeffs]
        if len(cs) > self.n:
            raise PreconditionError("coefficient vector longer than deg f")
        cs += [self.ring.zero] * (self.n - len(cs))
        return QuotElement(self, tuple(cs))

    def from_poly(self, g: Polynomial) -> QuotElement:
        return self.element((g % self.f).padded(self.n))

    @property
    def zero(self) -> QuotElement:
        return self.element([])

    @property
    def one(self) -> QuotElement:
        return self.element([self.ring.one])

    @property
    def x(self) -> QuotElement:
        if self.n == 1:
            return self.from_poly(Polynomial.x_power(self.ring, 1))
        return self.element([self.ring.zero, self.ring.one])

    def basis_element(self, t: int) -> QuotElement:
        return self.element([self.ring.zero] * t + [self.ring.one])

    def elements(self) -> Iterator[QuotElement]:
        ring = self.ring
        for idx in range(self.order):
            t = idx
            coeffs = []
            for _ in range(self.n):
                coeffs.append(ring.from_int_key(t % ring.order))
                t //= ring.order
            yield QuotElement(self, tuple(coeffs))

    def companion(self) -> RingMatrix:
        if self._companion is None:
            self._companion = companion_matrix(self.f)
        return self._companion

    def shift_operators(self) -> list[RingMatrix]:
        return [self.companion()]

    def splitting(self, seed: int = 0):
        if seed not in self._splittings:
            from .factor import splitting_data

            self._splittings[seed] = splitting_data(self.f, seed=seed)
        return self._splittings[seed]

    def idempotents(self, seed: int = 0):
        if seed not in self._idempotents:
            from .factor import primitive_idempotents

            self._idempotents[seed] = primitive_idempotents(self, seed=seed)
        return self._idempotents[seed]

    def idempotent_components(self, seed: int = 0) -> list[tuple[object, QuotElement]]:
        idem = self.idempotents(seed)
        return [(i + 1, e) for i, e in enumerate(idem.idempotents)]

    def evaluation_matrix(self, seed: int = 0):
        """(extension, embedding, E) with E[t][k] = alpha_k^t: the basis
        monomials evaluated at the ordered roots."""
        split = self.splitting(seed)
        ext = split.extension
        rows = []
        powers = [ext.one] * self.n
        for _ in range(self.n):
            rows.append(list(powers))
            powers = [p * a for p, a in zip(powers, split.roots)]
        return ext, split.embedding, RingMatrix(ext, rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, AmbientSpace) and self.ring == other.ring and self.f == other.f

    def __hash__(self) -> int:
        return hash((self.ring, self.f))

    def __repr__(self) -> str:
        return f"{self.ring}[x]/<{self.f.pretty()}>"


class QuotElement:
    """Element of an AmbientSpace, as a length-n coefficient vector."""

    __slots__ = ("ambient", "coeffs")

    def __init__(self, ambient: AmbientSpace, coeffs: tuple[RingElement, ...]):
        self.ambient = ambient
        self.coeffs = coeffs

    def to_poly(self) -> Polynomial:
        return Polynomial(self.ambient.ring, self.coeffs)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if not c.is_zero())

    def valuation(self) -> int:
        return min((c.valuation() for c in self.coeffs), default=self.ambient.ring.r)

    def _check(self, other: QuotElement) -> None:
        if self.ambient != other.ambient:
            raise PreconditionError("elements belong to different ambient spaces")

    def __add__(self, other: QuotElement) -> QuotElement:
        self._check(other)
        return QuotElement(self.ambient, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: QuotElement) -> QuotElement:
        self._check(other)
        return QuotElement(self.ambient, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> QuotElement:
        return QuotElement(self.ambient, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (RingElement, int)):
            return QuotElement(self.ambient, tuple(a * other for a in self.coeffs))
        self._check(other)
        prod = self.to_poly() * other.to_poly()
        return self.ambient.from_poly(prod)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> QuotElement:
        result = self.ambient.one
        acc = self
        while e:
            if e & 1:
                result = result * acc
            acc = acc * acc
            e >>= 1
        return result

    def regular_matrix(self) -> RingMatrix:
        return regular_representation(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, QuotElement) and self.ambient == other.ambient and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def pretty(self) -> str:
        return self.to_poly().pretty()

    def serialize(self) -> list:
        return [c.serialize() for c in self.coeffs]

    def __repr__(self) -> str:
        return f"QuotElement[{self.pretty()}]"


def companion_matrix(f: Polynomial) -> RingMatrix:
    """Companion matrix of a monic f = x^n - sum(f_i x^i): subdiagonal
    identity block with last row (f_0, ..., f_{n-1})."""
    if not f.is_monic():
        raise PreconditionError("companion matrix needs a monic polynomial")
    ring = f.parent
    n = f.degree
    rows = []
    for i in range(n - 1):
        rows.append([ring.one if j == i + 1 else ring.zero for j in range(n)])
    rows.append([-f.coeff(i) for i in range(n)])
    return RingMatrix(ring, rows)


def regular_representation(g: QuotElement) -> RingMatrix:
    """Rows are the coefficient vectors of g, xg, ..., x^{n-1}g."""
    amb = g.ambient
    rows = [list(g.coeffs)]
    cur = g
    for _ in range(amb.n - 1):
        cur = cur * amb.x
        rows.append(list(cur.coeffs))
    return RingMatrix(amb.ring, rows)


def row_product(a: Sequence[RingElement], b: Sequence[RingElement], f: Polynomial) -> list[RingElement]:
    """The row-algebra product a . b = a * M(b) attached to f."""
    if len(a) != f.degree or len(b) != f.degree:
        raise PreconditionError("row vectors must have length deg f")
    amb = AmbientSpace(f.parent, f)
    return row_vector_times(list(a), regular_representation(amb.element(b)))


def commutes_with_companion(M: RingMatrix, f: Polynomial) -> bool:
    """Membership test for the centralizer of the companion matrix."""
    E = companion_matrix(f)
    if M.nrows != E.nrows or M.ncols != E.ncols:
        raise PreconditionError("matrix size must equal deg f")
    return M * E == E * M


def trace_map(g: QuotElement) -> RingElement:
    """Trace of the regular representation: sum of pi_i(x^i g)."""
    amb = g.ambient
    acc = amb.ring.zero
    cur = g
    acc = acc + cur.coeffs[0]
    for i in range(1, amb.n):
        cur = cur * amb.x
        acc = acc + cur.coeffs[i]
    return acc
