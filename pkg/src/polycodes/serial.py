"""Bivariate serial codes: ideals of R[x1, x2]/<f1(x1), f2(x2)>.

The ambient is the tensor product of the two univariate quotients.  In the
basis x1^i x2^j ordered (i, j)-lexicographically, multiplication by x1 and
x2 act as E1 (x) Id and Id (x) E2, and the regular representation of an
element is the matching sum of Kronecker products.  The code machinery
from ``codes`` runs on this ambient unchanged: annihilators, trace and
star duals, decompositions, distances.

Both moduli must have squarefree residue; the evaluation transform uses a
single extension where both split, with root pairs ordered (i outer, j
inner).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Sequence

from .errors import NotAnImageError, PreconditionError
from .factor import splitting_data, splitting_degree
from .isometry import IsomorphismWitness, build_isomorphism, monomial_target
from .linalg import RingMatrix, is_monomial, matrix_inverse, row_vector_times
from .poly import Polynomial
from .quotient import AmbientSpace, QuotElement
from .rings import GaloisRing, RingElement, build_embedding, construct_ring, identity_embedding


class BivariateAmbient:
    """R[x1,x2]/<f1(x1), f2(x2)> with the fixed (i, j)-lexicographic basis."""

    def __init__(self, ring: GaloisRing, f1: Polynomial, f2: Polynomial):
        from .factor import _require_squarefree

        if f1.parent != ring or f2.parent != ring:
            raise PreconditionError("moduli are over the wrong ring")
        for f in (f1, f2):
            if not f.is_monic() or f.degree < 1:
                raise PreconditionError("moduli must be monic of degree >= 1")
            _require_squarefree(f)
        self.ring = ring
        self.f1 = f1
        self.f2 = f2
        self.n1 = f1.degree
        self.n2 = f2.degree
        self.amb1 = AmbientSpace(ring, f1)
        self.amb2 = AmbientSpace(ring, f2)
        self._shift_ops: list[RingMatrix] | None = None
        self._rep_powers: list[list[RingMatrix]] | None = None
        self._split: dict = {}
        self._idem: dict = {}

    @property
    def dim(self) -> int:
        return self.n1 * self.n2

    @property
    def order(self) -> int:
        return self.ring.order**self.dim

    def index(self, i: int, j: int) -> int:
        return i * self.n2 + j

    def element(self, coeffs: Sequence) -> BivariateElement:
        cs = [c if isinstance(c, RingElement) else self.ring.element(c) for c in coeffs]
        if len(cs) > self.dim:
            raise PreconditionError("coefficient vector longer than n1*n2")
        cs += [self.ring.zero] * (self.dim - len(cs))
        return BivariateElement(self, tuple(cs))

    @property
    def zero(self) -> BivariateElement:
        return self.element([])

    @property
    def one(self) -> BivariateElement:
        return self.element([self.ring.one])

    def basis_element(self, t: int) -> BivariateElement:
        return self.element([self.ring.zero] * t + [self.ring.one])

    @property
    def x1(self) -> BivariateElement:
        return self.basis_element(self.index(1, 0)) if self.n1 > 1 else self.tensor(self.amb1.x, self.amb2.one)

    @property
    def x2(self) -> BivariateElement:
        return self.basis_element(self.index(0, 1)) if self.n2 > 1 else self.tensor(self.amb1.one, self.amb2.x)

    def tensor(self, a: QuotElement, b: QuotElement) -> BivariateElement:
        """The element a(x1) * b(x2) from univariate components."""
        coeffs = []
        for ca in a.coeffs:
            for cb in b.coeffs:
                coeffs.append(ca * cb)
        return self.element(coeffs)

    def elements(self) -> Iterator[BivariateElement]:
        ring = self.ring
        for idx in range(self.order):
            t = idx
            coeffs = []
            for _ in range(self.dim):
                coeffs.append(ring.from_int_key(t % ring.order))
                t //= ring.order
            yield BivariateElement(self, tuple(coeffs))

    def shift_operators(self) -> list[RingMatrix]:
        if self._shift_ops is None:
            E1 = self.amb1.companion()
            E2 = self.amb2.companion()
            I1 = RingMatrix.identity(self.ring, self.n1)
            I2 = RingMatrix.identity(self.ring, self.n2)
            self._shift_ops = [E1.kron(I2), I1.kron(E2)]
        return self._shift_ops

    def _representation_powers(self) -> list[list[RingMatrix]]:
        if self._rep_powers is None:
            E1 = self.amb1.companion()
            E2 = self.amb2.companion()
            p1 = [RingMatrix.identity(self.ring, self.n1)]
            for _ in range(self.n1 - 1):
                p1.append(p1[-1] * E1)
            p2 = [RingMatrix.identity(self.ring, self.n2)]
            for _ in range(self.n2 - 1):
                p2.append(p2[-1] * E2)
            self._rep_powers = [p1, p2]
        return self._rep_powers

    def splittings(self, seed: int = 0):
        """Splitting data for f1 and f2 over one common extension."""
        if seed not in self._split:
            l1 = splitting_degree(self.f1, seed=seed)
            l2 = splitting_degree(self.f2, seed=seed)
            l = l1 * l2 // gcd(l1, l2)
            ring = self.ring
            ext = ring if l == 1 else construct_ring(ring.p, ring.r, ring.m * l)
            emb = identity_embedding(ring) if ext == ring else build_embedding(ring, ext)
            s1 = splitting_data(self.f1, seed=seed, extension=ext, embedding=emb)
            s2 = splitting_data(self.f2, seed=seed, extension=ext, embedding=emb)
            self._split[seed] = (s1, s2)
        return self._split[seed]

    def evaluation_matrix(self, seed: int = 0):
        """(extension, embedding, E) with E[(i,j)][(a,b)] = alpha_a^i beta_b^j."""
        s1, s2 = self.splittings(seed)
        ext = s1.extension

        def powers(roots, n):
            rows = []
            cur = [ext.one] * len(roots)
            for _ in range(n):
                rows.append(list(cur))
                cur = [c * a for c, a in zip(cur, roots)]
            return RingMatrix(ext, rows)

        E1 = powers(s1.roots, self.n1)
        E2 = powers(s2.roots, self.n2)
        return ext, s1.embedding, E1.kron(E2)

    def idempotent_components(self, seed: int = 0) -> list[tuple[object, BivariateElement]]:
        return [(label, e) for label, e, _ in tensor_idempotents(self, seed)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BivariateAmbient)
            and self.ring == other.ring
            and self.f1 == other.f1
            and self.f2 == other.f2
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.f1, self.f2))

    def __repr__(self) -> str:
        return f"{self.ring}[x1,x2]/<{self.f1.pretty('x1')}, {self.f2.pretty('x2')}>"


class BivariateElement:
    """Element of a BivariateAmbient in the fixed basis order."""

    __slots__ = ("ambient", "coeffs")

    def __init__(self, ambient: BivariateAmbient, coeffs: tuple[RingElement, ...]):
        self.ambient = ambient
        self.coeffs = coeffs

    def grid(self) -> list[list[RingElement]]:
        n1, n2 = self.ambient.n1, self.ambient.n2
        return [[self.coeffs[i * n2 + j] for j in range(n2)] for i in range(n1)]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if not c.is_zero())

    def valuation(self) -> int:
        return min((c.valuation() for c in self.coeffs), default=self.ambient.ring.r)

    def _check(self, other: BivariateElement) -> None:
        if self.ambient != other.ambient:
            raise PreconditionError("elements belong to different ambient spaces")

    def __add__(self, other: BivariateElement) -> BivariateElement:
        self._check(other)
        return BivariateElement(self.ambient, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: BivariateElement) -> BivariateElement:
        self._check(other)
        return BivariateElement(self.ambient, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> BivariateElement:
        return BivariateElement(self.ambient, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (RingElement, int)):
            return BivariateElement(self.ambient, tuple(a * other for a in self.coeffs))
        self._check(other)
        amb = self.ambient
        ring = amb.ring
        n1, n2 = amb.n1, amb.n2
        wide = [[ring.zero] * (2 * n2 - 1) for _ in range(2 * n1 - 1)]
        a, b = self.grid(), other.grid()
        for i1 in range(n1):
            for j1 in range(n2):
                c = a[i1][j1]
                if c.is_zero():
                    continue
                for i2 in range(n1):
                    for j2 in range(n2):
                        d = b[i2][j2]
                        if not d.is_zero():
                            wide[i1 + i2][j1 + j2] = wide[i1 + i2][j1 + j2] + c * d
        # reduce x1 degrees by f1, then x2 degrees by f2 (monic moduli)
        for d in range(2 * n1 - 2, n1 - 1, -1):
            row = wide[d]
            if all(c.is_zero() for c in row):
                continue
            for i in range(n1):
                fc = amb.f1.coeff(i)
                if not fc.is_zero():
                    target = wide[d - n1 + i]
                    for j in range(len(row)):
                        target[j] = target[j] - fc * row[j]
            wide[d] = [ring.zero] * (2 * n2 - 1)
        out = []
        for i in range(n1):
            row = wide[i]
            for d in range(2 * n2 - 2, n2 - 1, -1):
                c = row[d]
                if c.is_zero():
                    continue
                for j in range(n2):
                    fc = amb.f2.coeff(j)
                    if not fc.is_zero():
                        row[d - n2 + j] = row[d - n2 + j] - fc * c
                row[d] = ring.zero
            out.extend(row[:n2])
        return BivariateElement(amb, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BivariateElement:
        result = self.ambient.one
        acc = self
        while e:
            if e & 1:
                result = result * acc
            acc = acc * acc
            e >>= 1
        return result

    def regular_matrix(self) -> RingMatrix:
        """sum of k_ij * E1^i (x) E2^j over the coefficient grid."""
        amb = self.ambient
        p1, p2 = amb._representation_powers()
        total = RingMatrix.zero(amb.ring, amb.dim, amb.dim)
        for i in range(amb.n1):
            for j in range(amb.n2):
                c = self.coeffs[amb.index(i, j)]
                if not c.is_zero():
                    total = total + p1[i].kron(p2[j]) * c
        return total

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BivariateElement)
            and self.ambient == other.ambient
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def serialize(self) -> list:
        return [c.serialize() for c in self.coeffs]

    def pretty(self) -> str:
        amb = self.ambient
        terms = []
        for i in range(amb.n1):
            for j in range(amb.n2):
                c = self.coeffs[amb.index(i, j)]
                if c.is_zero():
                    continue
                mono = ""
                if i:
                    mono += "x1" + (f"^{i}" if i > 1 else "")
                if j:
                    mono += ("" if not mono else " ") + "x2" + (f"^{j}" if j > 1 else "")
                cs = c.pretty() if c.ring.m > 1 else str(c.coeffs[0])
                if mono and cs == "1":
                    terms.append(mono)
                elif mono:
                    terms.append(f"{cs} {mono}" if c.ring.m == 1 else f"({cs}) {mono}")
                else:
                    terms.append(cs if c.ring.m == 1 else f"({cs})")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"BivariateElement[{self.pretty()}]"


def tensor_idempotents(ambient: BivariateAmbient, seed: int = 0) -> list[tuple[tuple[int, int], BivariateElement, bool]]:
    """The grid {e_i (x) e_j} of products of the univariate primitive
    idempotents: a complete pairwise-orthogonal set (verified exactly).

    Each entry carries a primitivity flag: e_i (x) e_j generates a local
    component iff the residue degrees of the matching factors are coprime;
    otherwise the component splits further in the tensor square.
    """
    idem1 = ambient.amb1.idempotents(seed)
    idem2 = ambient.amb2.idempotents(seed)
    out = []
    total = ambient.zero
    for i, e1 in enumerate(idem1.idempotents):
        d1 = idem1.factorization.residue_factors[i].degree
        for j, e2 in enumerate(idem2.idempotents):
            d2 = idem2.factorization.residue_factors[j].degree
            e = ambient.tensor(e1, e2)
            if not (e * e == e):
                raise AssertionError("tensor idempotent is not idempotent")
            out.append(((i + 1, j + 1), e, gcd(d1, d2) == 1))
            total = total + e
    if total != ambient.one:
        raise AssertionError("tensor idempotents do not sum to 1")
    for a in range(len(out)):
        for b in range(a + 1, len(out)):
            if not (out[a][1] * out[b][1]).is_zero():
                raise AssertionError("tensor idempotents are not orthogonal")
    return out


@dataclass(frozen=True)
class BivariateSpectrum:
    """Values k(alpha_a, beta_b) in root-pair order (a outer, b inner)."""

    ambient: BivariateAmbient
    seed: int
    values: tuple[RingElement, ...]

    def serialize(self) -> list:
        return [v.serialize() for v in self.values]


def bivariate_ms(k: BivariateElement, seed: int = 0) -> BivariateSpectrum:
    """Evaluate at all root pairs through the common splitting extension."""
    amb = k.ambient
    ext, emb, E = amb.evaluation_matrix(seed)
    values = row_vector_times([emb(c) for c in k.coeffs], E)
    return BivariateSpectrum(amb, seed, tuple(values))


def bivariate_ms_inverse(spec: BivariateSpectrum) -> BivariateElement:
    """Preimage via the Kronecker-factored Vandermonde inverse, with the
    base-ring membership check per coefficient."""
    amb = spec.ambient
    s1, s2 = amb.splittings(spec.seed)
    ext = s1.extension
    if len(spec.values) != amb.dim:
        raise PreconditionError("spectrum length differs from n1*n2")

    def powers(roots, n):
        rows = []
        cur = [ext.one] * len(roots)
        for _ in range(n):
            rows.append(list(cur))
            cur = [c * a for c, a in zip(cur, roots)]
        return RingMatrix(ext, rows)

    V1_inv = matrix_inverse(powers(s1.roots, amb.n1))
    V2_inv = matrix_inverse(powers(s2.roots, amb.n2))
    ext_coeffs = row_vector_times(list(spec.values), V1_inv.kron(V2_inv))
    emb = s1.embedding
    coeffs = []
    for c in ext_coeffs:
        b = emb.preimage(c)
        if b is None:
            raise NotAnImageError("spectrum is not the transform of a base-ring element")
        coeffs.append(b)
    return amb.element(coeffs)


@dataclass(frozen=True)
class SerialIsometryWitness:
    """Coordinatewise monomial isometry of a product ambient.

    case 1: both moduli x^n - lambda; case 2: one constant shape and one
    linear shape x^n - lambda x; case 3: both linear.  The tensor product
    of the two monomial W matrices certifies the isometry.
    """

    case: int
    witness1: IsomorphismWitness
    witness2: IsomorphismWitness
    target1: Polynomial
    target2: Polynomial
    W: RingMatrix


def serial_isometry(
    f1: Polynomial,
    f2: Polynomial,
    omega1: tuple[RingElement, int],
    omega2: tuple[RingElement, int],
) -> SerialIsometryWitness:
    """Classify a coordinate pair of monomial substitutions and produce the
    isometric target pair, certified by the Kronecker product of the
    univariate monomial matrices."""
    from .isometry import _shape_constant, _shape_linear

    shapes = []
    for f in (f1, f2):
        if _shape_constant(f) is not None:
            shapes.append("constant")
        elif _shape_linear(f) is not None:
            shapes.append("linear")
        else:
            raise PreconditionError("modulus %s is not of a monomial-isometry shape" % f.pretty())
    case = {("constant", "constant"): 1, ("linear", "linear"): 3}.get(tuple(shapes), 2)
    targets = []
    witnesses = []
    for f, (c, e) in ((f1, omega1), (f2, omega2)):
        targets.append(monomial_target(f, c, e))
        amb = AmbientSpace(f.parent, f)
        omega = amb.element([f.parent.zero] * e + [c])
        witnesses.append(build_isomorphism(f, omega))
    W = witnesses[0].W.kron(witnesses[1].W)
    mono, _ = is_monomial(W)
    if not mono:
        raise AssertionError("tensor of monomial matrices failed the monomial test")
    return SerialIsometryWitness(case, witnesses[0], witnesses[1], targets[0], targets[1], W)
