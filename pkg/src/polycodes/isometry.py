"""Isomorphisms and Hamming isometries between polycyclic ambient spaces.

Given f and an element omega of R[x]/<f> whose power matrix W (rows
1, omega, ..., omega^{n-1}) has unit determinant, the coefficients of a
monic h with h(omega) = 0 are read off as rho(omega^n) W^{-1}, and
a |-> a W is a ring isomorphism R[x]/<h> -> R[x]/<f> fixing constants.
The isomorphism is a Hamming isometry exactly when W is monomial, which
happens only for f = x^n - f0 with omega a monomial of exponent coprime
to n, or f = x^n - f1 x with exponent coprime to n - 1 (units throughout).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import PreconditionError, SingularMatrixError
from .linalg import RingMatrix, is_monomial, matrix_inverse, row_vector_times
from .poly import Polynomial
from .quotient import AmbientSpace, QuotElement
from .rings import GaloisRing, RingElement


@dataclass(frozen=True)
class IsomorphismWitness:
    """theta: R[x]/<h> -> R[x]/<f>, x |-> omega, realized by the matrix W."""

    ambient: AmbientSpace  # codomain R[x]/<f>
    omega: QuotElement
    W: RingMatrix
    W_inv: RingMatrix
    h: Polynomial
    det_W: RingElement

    def domain(self) -> AmbientSpace:
        return AmbientSpace(self.ambient.ring, self.h)

    def apply(self, coeffs) -> QuotElement:
        """Image of the R[x]/<h> element with the given coefficient vector."""
        if isinstance(coeffs, QuotElement):
            coeffs = list(coeffs.coeffs)
        else:
            coeffs = [c if isinstance(c, RingElement) else self.ambient.ring.element(c) for c in coeffs]
        if len(coeffs) != self.ambient.n:
            raise PreconditionError("coefficient vector has the wrong length")
        return self.ambient.element(row_vector_times(coeffs, self.W))


def power_matrix(f: Polynomial, omega: QuotElement) -> RingMatrix:
    """Rows are the coefficient vectors of omega^0, ..., omega^{n-1}."""
    amb = omega.ambient
    if amb.f != f:
        raise PreconditionError("omega does not live in R[x]/<f>")
    rows = []
    cur = amb.one
    for _ in range(amb.n):
        rows.append(list(cur.coeffs))
        cur = cur * omega
    return RingMatrix(amb.ring, rows)


def build_isomorphism(f: Polynomial, omega: QuotElement) -> IsomorphismWitness:
    """Construct h and theta from omega; requires det W to be a unit."""
    amb = omega.ambient
    if amb.f != f:
        raise PreconditionError("omega does not live in R[x]/<f>")
    W = power_matrix(f, omega)
    W_inv = matrix_inverse(W)  # raises SingularMatrixError when det is not a unit
    from .linalg import det as _det

    d = _det(W)
    h_low = row_vector_times(list((omega ** amb.n).coeffs), W_inv)
    ring = amb.ring
    h = Polynomial(ring, [-c for c in h_low] + [ring.one])
    # certificate: h(omega) = 0 in R[x]/<f>
    acc = amb.zero
    for c in reversed(h.padded(amb.n + 1)):
        acc = acc * omega + amb.one * c
    if not acc.is_zero():
        raise AssertionError("constructed h does not annihilate omega")
    return IsomorphismWitness(amb, omega, W, W_inv, h, d)


@dataclass(frozen=True)
class IsometryVerdict:
    """Classification of theta for a given (f, omega).

    kind is one of 'isometric-with-target', 'isomorphic-not-monomial',
    'not-applicable' (det W not a unit).  ``shape_prediction`` is the
    monomial-f/monomial-omega criterion and ``prediction_agrees`` records
    whether it matched the direct monomiality test of W; the direct test is
    authoritative for the verdict.
    """

    kind: str
    witness: IsomorphismWitness | None
    target: Polynomial | None
    monomial_witness: tuple | None
    shape_prediction: bool
    prediction_agrees: bool
    counterexample: QuotElement | None


def _monomial_form(g: QuotElement) -> tuple[RingElement, int] | None:
    """(coefficient, exponent) when g is a single-term unit monomial."""
    nz = [(i, c) for i, c in enumerate(g.coeffs) if not c.is_zero()]
    if len(nz) != 1 or not nz[0][1].is_unit():
        return None
    return nz[0][1], nz[0][0]


def _shape_constant(f: Polynomial) -> RingElement | None:
    """f = x^n - f0 with f0 a unit."""
    n = f.degree
    f0 = -f.coeff(0)
    if not f0.is_unit():
        return None
    if any(not f.coeff(i).is_zero() for i in range(1, n)):
        return None
    return f0


def _shape_linear(f: Polynomial) -> RingElement | None:
    """f = x^n - f1 x with f1 a unit."""
    n = f.degree
    f1 = -f.coeff(1)
    if not f1.is_unit() or not f.coeff(0).is_zero():
        return None
    if any(not f.coeff(i).is_zero() for i in range(2, n)):
        return None
    return f1


def _predict_monomial(f: Polynomial, omega: QuotElement) -> bool:
    n = f.degree
    mono = _monomial_form(omega)
    if mono is None:
        return False
    _, i = mono
    f0 = _shape_constant(f)
    if f0 is not None and 1 <= i <= n - 1 and gcd(n, i) == 1:
        return True
    f1 = _shape_linear(f)
    if f1 is not None and 1 <= i <= n - 1 and gcd(n - 1, i) == 1:
        return True
    return False


def classify_isometry(f: Polynomial, omega: QuotElement) -> IsometryVerdict:
    """Decide whether theta is a Hamming isometry, with certificates."""
    if f.degree < 2:
        raise PreconditionError("classification needs deg f >= 2")
    prediction = _predict_monomial(f, omega)
    try:
        witness = build_isomorphism(f, omega)
    except SingularMatrixError:
        return IsometryVerdict("not-applicable", None, None, None, prediction, not prediction, None)
    mono, mwitness = is_monomial(witness.W)
    agrees = mono == prediction
    if mono:
        return IsometryVerdict("isometric-with-target", witness, witness.h, mwitness, prediction, agrees, None)
    counter = None
    for t, row in enumerate(witness.W.rows):
        if sum(1 for c in row if not c.is_zero()) != 1:
            counter = witness.ambient.element(list(row))
            break
    return IsometryVerdict("isomorphic-not-monomial", witness, None, None, prediction, agrees, counter)


def monomial_target(f: Polynomial, omega_coeff: RingElement, omega_exp: int) -> Polynomial:
    """Closed-form target modulus for a monomial omega = c x^e.

    For f = x^n - f0: the target is x^n - c^n f0^e; for f = x^n - f1 x it is
    x^n - c^{n-1} f1^e x.  Both match the h produced by the witness
    construction, which is asserted.
    """
    ring = f.parent
    n = f.degree
    if not omega_coeff.is_unit():
        raise PreconditionError("omega coefficient must be a unit")
    f0 = _shape_constant(f)
    f1 = _shape_linear(f)
    if f0 is not None and 1 <= omega_exp <= n - 1 and gcd(n, omega_exp) == 1:
        c0 = omega_coeff**n * f0**omega_exp
        target = Polynomial(ring, [-c0] + [ring.zero] * (n - 1) + [ring.one])
    elif f1 is not None and 1 <= omega_exp <= n - 1 and gcd(n - 1, omega_exp) == 1:
        c1 = omega_coeff ** (n - 1) * f1**omega_exp
        target = Polynomial(ring, [ring.zero, -c1] + [ring.zero] * (n - 2) + [ring.one])
    else:
        raise PreconditionError("inputs are not in a monomial-isometry shape")
    amb = AmbientSpace(ring, f)
    omega = amb.element([ring.zero] * omega_exp + [omega_coeff])
    if build_isomorphism(f, omega).h != target:
        raise AssertionError("closed-form target disagrees with the witness construction")
    return target


@dataclass(frozen=True)
class ConstacyclicEquivalence:
    """Witness that x^n - lam is Hamming-isometric to x^n - 1."""

    root: RingElement  # a unit with root^n = lam
    exponent: int
    witness: IsomorphismWitness
    target: Polynomial


def constacyclic_witness(ring: GaloisRing, lam: RingElement, n: int) -> ConstacyclicEquivalence | None:
    """Search for a unit n-th root of lam; when one exists, return the
    isometry mapping the lam-constacyclic ambient to the cyclic one."""
    if not lam.is_unit():
        raise PreconditionError("lambda must be a unit")
    if n < 2:
        raise PreconditionError("length must be at least 2")
    root = None
    for u in ring.units():
        if u**n == lam:
            root = u
            break
    if root is None:
        return None
    f = Polynomial(ring, [-lam] + [ring.zero] * (n - 1) + [ring.one])
    amb = AmbientSpace(ring, f)
    omega = amb.element([ring.zero, root.inverse()])
    witness = build_isomorphism(f, omega)
    target = Polynomial(ring, [-ring.one] + [ring.zero] * (n - 1) + [ring.one])
    if witness.h != target:
        raise AssertionError("constacyclic witness does not target the cyclic modulus")
    return ConstacyclicEquivalence(root, 1, witness, target)
