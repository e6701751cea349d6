"""Codes as ideals of the quotient ring, with their duals and invariants.

A code is stored as the canonical Howell basis of the coefficient module
of the ideal generated by the inputs and all their shifts, so two codes
are equal iff their serialized bases are equal.  The machinery is generic
over the ambient: it only needs a dimension, elementwise multiplication,
regular-representation matrices, shift operators and (for the star form)
an evaluation matrix over the splitting extension.  That lets the
bivariate serial ambient reuse everything here unchanged.

Dual forms:

* ``trace``  <g, h> = trace(M(gh))
* ``zero``   <g, h> = constant term of gh (univariate, needs f(0) != 0)
* ``star``   <g, h> = sum over roots of g(alpha) h(alpha)
* the annihilator Ann(C) = {h : hC = 0}

For a separable modulus these all cut out the same submodule; the report
operation computes each one independently and compares.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EnumerationBudgetError, PreconditionError
from .linalg import HowellBasis, RingMatrix, howell_from_vectors, kernel, row_vector_times
from .quotient import AmbientSpace
from .rings import GaloisRing


class Code:
    """An ideal of the ambient, canonically represented."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient, basis: HowellBasis):
        self.ambient = ambient
        self.basis = basis

    @property
    def size(self) -> int:
        return self.basis.span_size()

    def is_zero(self) -> bool:
        return self.basis.nrows == 0

    def is_full(self) -> bool:
        return self.size == self.ambient.ring.order ** self.ambient.dim

    def contains(self, element) -> bool:
        return self.basis.contains(list(element.coeffs))

    def codewords(self):
        for v in self.basis.span():
            yield self.ambient.element(v)

    def generators(self):
        return [self.ambient.element(list(row)) for row in self.basis.matrix.rows]

    def __eq__(self, other) -> bool:
        return isinstance(other, Code) and self.ambient == other.ambient and self.basis.matrix == other.basis.matrix

    def __hash__(self) -> int:
        return hash(self.basis.matrix)

    def serialize(self) -> list:
        return self.basis.serialize()

    def __repr__(self) -> str:
        return f"Code(dim={self.ambient.dim}, size={self.size})"


def code_from_generators(ambient, generators) -> Code:
    """The ideal generated by the inputs: Howell basis of the span of all
    shifts, with the shift-closure certificate checked on the result."""
    rows = []
    for g in generators:
        if g.ambient != ambient:
            raise PreconditionError("generator lives in a different ambient space")
        rows.extend(list(r) for r in g.regular_matrix().rows)
    basis = howell_from_vectors(rows, ambient.ring, ambient.dim)
    for op in ambient.shift_operators():
        for row in basis.matrix.rows:
            if not basis.contains(row_vector_times(list(row), op)):
                raise AssertionError("ideal closure certificate failed")
    return Code(ambient, basis)


def zero_code(ambient) -> Code:
    return code_from_generators(ambient, [])


def full_code(ambient) -> Code:
    return code_from_generators(ambient, [ambient.one])


def code_sum(a: Code, b: Code) -> Code:
    if a.ambient != b.ambient:
        raise PreconditionError("codes live in different ambient spaces")
    rows = [list(r) for r in a.basis.matrix.rows] + [list(r) for r in b.basis.matrix.rows]
    return Code(a.ambient, howell_from_vectors(rows, a.ambient.ring, a.ambient.dim))


def generator_matrix(C: Code) -> RingMatrix:
    return C.basis.matrix


def annihilator(C: Code) -> Code:
    """Ann(C) = {h : gh = 0 for all g in C}, via the kernel of the stacked
    regular representations of the basis elements."""
    ambient = C.ambient
    gens = C.generators()
    if not gens:
        return full_code(ambient)
    stacked = []
    mats = [g.regular_matrix() for g in gens]
    for i in range(ambient.dim):
        row = []
        for M in mats:
            row.extend(M.rows[i])
        stacked.append(row)
    kern = kernel(RingMatrix(ambient.ring, stacked))
    return code_from_generators(ambient, [ambient.element(list(v)) for v in kern.matrix.rows])


_gram_cache: dict = {}


def _trace_gram(ambient) -> RingMatrix:
    key = ("trace", ambient)
    if key not in _gram_cache:
        n = ambient.dim
        basis = [ambient.basis_element(t) for t in range(n)]
        rows = [[(basis[i] * basis[j]).regular_matrix().trace() for j in range(n)] for i in range(n)]
        _gram_cache[key] = RingMatrix(ambient.ring, rows)
    return _gram_cache[key]


def _zero_gram(ambient) -> RingMatrix:
    if not isinstance(ambient, AmbientSpace):
        raise PreconditionError("the constant-term form is univariate only")
    if ambient.f.coeff(0).is_zero():
        raise PreconditionError("the constant-term form is degenerate when f(0) = 0")
    key = ("zero", ambient)
    if key not in _gram_cache:
        n = ambient.dim
        basis = [ambient.basis_element(t) for t in range(n)]
        rows = [[(basis[i] * basis[j]).coeffs[0] for j in range(n)] for i in range(n)]
        _gram_cache[key] = RingMatrix(ambient.ring, rows)
    return _gram_cache[key]


def _gram_dual(C: Code, gram: RingMatrix) -> Code:
    ambient = C.ambient
    if C.is_zero():
        return full_code(ambient)
    G = C.basis.matrix
    B = G * gram  # k x n of conditions
    kern = kernel(B.transpose())
    return code_from_generators(ambient, [ambient.element(list(v)) for v in kern.matrix.rows])


def _star_dual(C: Code, seed: int = 0) -> Code:
    """Star dual computed through spectra over the splitting extension, then
    restricted to the base ring by flattening over Z_{p^r}."""
    ambient = C.ambient
    if C.is_zero():
        return full_code(ambient)
    ring: GaloisRing = ambient.ring
    ext, emb, E = ambient.evaluation_matrix(seed)
    n = ambient.dim
    gens = C.generators()
    # spectra of the generators, then condition coefficients c[g][t]
    conditions = []
    for g in gens:
        spec = row_vector_times([emb(c) for c in g.coeffs], E)
        conditions.append(row_vector_times(spec, E.transpose()))
    powers = emb.generator_powers()
    m, bigm = ring.m, ext.m
    base = GaloisRing(ring.p, ring.r, 1)
    flat_rows = []
    for t in range(n):
        for s in range(m):
            row = []
            for cond in conditions:
                prod = powers[s] * cond[t]
                row.extend(base.element(c) for c in prod.coeffs)
            flat_rows.append(row)
    if not conditions:
        return full_code(ambient)
    kern = kernel(RingMatrix(base, flat_rows))
    dual_gens = []
    for v in kern.matrix.rows:
        coeffs = []
        for t in range(n):
            coeffs.append(ring.element([v[t * m + s].coeffs[0] for s in range(m)]))
        dual_gens.append(ambient.element(coeffs))
    return code_from_generators(ambient, dual_gens)


def dual_code(C: Code, form: str, seed: int = 0) -> Code:
    """The dual of C under the selected bilinear form."""
    if form == "trace":
        return _gram_dual(C, _trace_gram(C.ambient))
    if form == "zero":
        return _gram_dual(C, _zero_gram(C.ambient))
    if form == "star":
        return _star_dual(C, seed)
    raise PreconditionError(f"unknown dual form {form!r}")


@dataclass(frozen=True)
class DualityReport:
    """All duals of a code side by side.  ``duals`` maps form name to the
    computed code ('annihilator' included); ``skipped`` lists forms that are
    undefined for this ambient (the constant-term form when f(0) = 0)."""

    code: Code
    duals: dict
    all_equal: bool
    skipped: tuple[str, ...]

    def pairwise(self) -> dict:
        names = sorted(self.duals)
        return {
            (a, b): self.duals[a] == self.duals[b] for i, a in enumerate(names) for b in names[i + 1 :]
        }


def duality_report(C: Code, seed: int = 0) -> DualityReport:
    duals = {"annihilator": annihilator(C), "trace": dual_code(C, "trace"), "star": dual_code(C, "star", seed)}
    skipped = ()
    if isinstance(C.ambient, AmbientSpace):
        if C.ambient.f.coeff(0).is_zero():
            skipped = ("zero",)
        else:
            duals["zero"] = dual_code(C, "zero")
    ref = duals["annihilator"]
    return DualityReport(C, duals, all(d == ref for d in duals.values()), skipped)


@dataclass(frozen=True)
class Decomposition:
    """Per-idempotent-component conductor exponents: component i of the code
    equals p^{k_i} times the full component.  A code is free iff every k_i
    is 0 or r."""

    components: tuple[tuple[object, int], ...]
    free: bool


def decompose(C: Code, seed: int = 0) -> Decomposition:
    """Conductor exponents of C on the idempotent components, with an exact
    reassembly check."""
    ambient = C.ambient
    ring = ambient.ring
    comps = []
    regen = []
    for label, e in ambient.idempotent_components(seed):
        k = ring.r
        for g in C.generators():
            k = min(k, (e * g).valuation())
        comps.append((label, k))
        if k < ring.r:
            regen.append(e * ring.p_power(k))
    if code_from_generators(ambient, regen) != C:
        raise AssertionError("component reassembly does not reproduce the code")
    free = all(k in (0, ring.r) for _, k in comps)
    return Decomposition(tuple(comps), free)


@dataclass(frozen=True)
class DistanceReport:
    """Minimum Hamming distance by full enumeration; ``empty`` marks the zero
    code, where the minimum is defined as 0 by convention."""

    value: int
    empty: bool
    weight_distribution: dict

    def serialize(self) -> dict:
        return {
            "min_distance": self.value,
            "empty": self.empty,
            "weight_distribution": {str(w): c for w, c in sorted(self.weight_distribution.items())},
        }


def min_distance(C: Code, budget: int = 1 << 24) -> DistanceReport:
    size = C.size
    if size > budget:
        raise EnumerationBudgetError(f"code has {size} words, budget is {budget}")
    dist: dict[int, int] = {}
    best = None
    for v in C.basis.span():
        w = sum(1 for c in v if not c.is_zero())
        dist[w] = dist.get(w, 0) + 1
        if w > 0 and (best is None or w < best):
            best = w
    if best is None:
        return DistanceReport(0, True, dist)
    return DistanceReport(best, False, dist)


def all_ideals(ambient, budget: int = 4096) -> list[Code]:
    """Every ideal of the ambient, by brute force: all principal ideals,
    then closure under sums."""
    if ambient.order > budget:
        raise EnumerationBudgetError(f"ambient has {ambient.order} elements, budget is {budget}")
    seen: dict = {}
    for g in ambient.elements():
        C = code_from_generators(ambient, [g])
        seen.setdefault(str(C.serialize()), C)
    ideals = list(seen.values())
    changed = True
    while changed:
        changed = False
        current = list(seen.values())
        for i, A in enumerate(current):
            for B in current[i + 1 :]:
                S = code_sum(A, B)
                key = str(S.serialize())
                if key not in seen:
                    seen[key] = S
                    changed = True
    ideals = list(seen.values())
    ideals.sort(key=lambda c: (c.size, str(c.serialize())))
    return ideals
