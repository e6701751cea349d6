"""Evaluation transforms: root-of-unity DFT invertibility, Vandermonde
matrices over the splitting extension, and the Mattson-Solomon transform
of R[x]/<f> with its inverse.

The transform of g is the vector (g(alpha_1), ..., g(alpha_n)) over the
splitting extension, in the fixed root order of the SplittingData; it is
an injective ring homomorphism onto its image, carrying multiplication
mod f to the componentwise (Schur) product.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAnImageError, PreconditionError
from .factor import SplittingData
from .linalg import RingMatrix, matrix_inverse, row_vector_times
from .quotient import AmbientSpace, QuotElement
from .rings import RingElement


@dataclass(frozen=True)
class DftReport:
    """Outcome of the invertibility test for a length-N DFT generated by xi:
    invertible iff every xi^k - 1 (1 <= k < N) is a unit."""

    invertible: bool
    witness_exponent: int | None = None
    witness_value: object = None


def dft_invertible(xi, N: int) -> DftReport:
    """Check xi generates an invertible DFT of length N over its ring.

    Works for Galois-ring elements and for the composite Z_M backend; the
    element only needs pow/sub/is_unit.  Raises when xi is not an N-th root
    of unity or xi = 1.
    """
    ring = xi.ring
    if N < 2:
        raise PreconditionError("DFT length must be at least 2")
    if xi == ring.one:
        raise PreconditionError("xi = 1 does not generate a DFT")
    if xi**N != ring.one:
        raise PreconditionError("xi is not an N-th root of unity")
    for k in range(1, N):
        v = xi**k - ring.one
        if not v.is_unit():
            return DftReport(False, k, v)
    return DftReport(True)


@dataclass(frozen=True)
class VandermondePair:
    """V with V[i][j] = alpha_j^i (0-indexed) and its exact inverse."""

    V: RingMatrix
    V_inv: RingMatrix


def vandermonde(split: SplittingData) -> VandermondePair:
    """Vandermonde matrix of the ordered roots and its inverse.

    Distinct residues of the roots make every root difference a unit, so
    the determinant is a unit and elimination with unit pivots succeeds.
    """
    ext = split.extension
    n = split.n
    residues = [a.residue() for a in split.roots]
    if len({tuple(x.coeffs) for x in residues}) != n:
        raise PreconditionError("roots do not have pairwise distinct residues")
    rows = []
    powers = [ext.one] * n
    for _ in range(n):
        rows.append(list(powers))
        powers = [p * a for p, a in zip(powers, split.roots)]
    V = RingMatrix(ext, rows)
    return VandermondePair(V, matrix_inverse(V))


def vandermonde_inverse_symbolic(split: SplittingData) -> RingMatrix:
    """Closed-form Vandermonde inverse from elementary symmetric polynomials.

    (V^T)^{-1}[i][j] = (-1)^{i+j} S_{n-i}(roots except alpha_j) divided by
    prod_{l<j}(alpha_j - alpha_l) * prod_{k>j}(alpha_k - alpha_j); kept as a
    cross-check oracle for the elimination inverse.
    """
    ext = split.extension
    roots = split.roots
    n = len(roots)
    wt = [[ext.zero] * n for _ in range(n)]
    for j in range(n):
        others = [roots[t] for t in range(n) if t != j]
        # elementary symmetric polynomials of the remaining roots
        sym = [ext.one] + [ext.zero] * (n - 1)
        for a in others:
            for d in range(len(others), 0, -1):
                sym[d] = sym[d] + sym[d - 1] * a
        denom = ext.one
        for l in range(j):
            denom = denom * (roots[j] - roots[l])
        for k in range(j + 1, n):
            denom = denom * (roots[k] - roots[j])
        dinv = denom.inverse()
        for i in range(n):
            v = sym[n - 1 - i] * dinv
            if (i + j) % 2 == 1:
                v = -v
            wt[i][j] = v
    # wt inverts V^T, so the inverse of V is its transpose
    return RingMatrix(ext, wt).transpose()


@dataclass(frozen=True)
class Spectrum:
    """Transform image: values g(alpha_i) in the fixed root order."""

    splitting: SplittingData
    values: tuple[RingElement, ...]

    def __len__(self) -> int:
        return len(self.values)

    def star(self, other: Spectrum) -> Spectrum:
        if self.splitting is not other.splitting and self.splitting != other.splitting:
            raise PreconditionError("spectra over different splittings")
        return Spectrum(self.splitting, tuple(a * b for a, b in zip(self.values, other.values)))

    def __add__(self, other: Spectrum) -> Spectrum:
        return Spectrum(self.splitting, tuple(a + b for a, b in zip(self.values, other.values)))

    def serialize(self) -> list:
        return [v.serialize() for v in self.values]


def ms_transform(g: QuotElement, split: SplittingData) -> Spectrum:
    """Evaluate g at the ordered roots of f in the splitting extension."""
    if g.ambient.f != split.f:
        raise PreconditionError("element and splitting data disagree on f")
    ext = split.extension
    coeffs = [split.embedding(c) for c in g.coeffs]
    values = []
    for a in split.roots:
        acc = ext.zero
        for c in reversed(coeffs):
            acc = acc * a + c
        values.append(acc)
    return Spectrum(split, tuple(values))


def ms_inverse(spectrum: Spectrum) -> QuotElement:
    """The unique preimage of a spectrum, when one exists over the base ring.

    The candidate coefficient vector is B * V^{-1} over the extension; each
    coefficient must then land in the embedded base ring, otherwise the
    input was not a transform image and NotAnImageError is raised.
    """
    split = spectrum.splitting
    if len(spectrum.values) != split.n:
        raise PreconditionError("spectrum length differs from deg f")
    pair = vandermonde(split)
    ext_coeffs = row_vector_times(list(spectrum.values), pair.V_inv)
    base_coeffs = []
    for c in ext_coeffs:
        b = split.embedding.preimage(c)
        if b is None:
            raise NotAnImageError("spectrum is not the transform of a base-ring element")
        base_coeffs.append(b)
    ambient = AmbientSpace(split.embedding.source, split.f)
    return ambient.element(base_coeffs)
