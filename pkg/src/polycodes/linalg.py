"""Exact dense linear algebra over GR(p^r, m).

The ring is local with maximal ideal <p>, so every nonzero element is a
unit times p^k.  That makes two classical tools available without general
gcd machinery:

* Howell normal form: the canonical representative of a row module.  Two
  matrices span the same module iff their Howell forms are identical, and
  membership testing is plain left-to-right reduction.
* Smith-style diagonalization U*M*V = diag(p^k1, ..., p^ks) with invertible
  U, V, obtained by always pivoting on a minimal-valuation entry.  Kernels,
  determinants, linear solves and inverses all read off from it.

Supported envelope is dense matrices up to n = 64.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import PreconditionError, SingularMatrixError
from .rings import GaloisRing, RingElement


class RingMatrix:
    """Dense matrix over a Galois ring; rows of RingElement entries."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring: GaloisRing, rows: Sequence[Sequence[RingElement]]):
        self.ring = ring
        self.rows = tuple(tuple(row) for row in rows)
        ncols = {len(row) for row in self.rows}
        if len(ncols) > 1:
            raise PreconditionError("ragged rows")

    @classmethod
    def identity(cls, ring: GaloisRing, n: int) -> RingMatrix:
        return cls(ring, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, ring: GaloisRing, nrows: int, ncols: int) -> RingMatrix:
        return cls(ring, [[ring.zero] * ncols for _ in range(nrows)])

    @classmethod
    def from_ints(cls, ring: GaloisRing, rows: Sequence[Sequence]) -> RingMatrix:
        return cls(ring, [[ring.element(c) for c in row] for row in rows])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij: tuple[int, int]) -> RingElement:
        return self.rows[ij[0]][ij[1]]

    def row(self, i: int) -> tuple[RingElement, ...]:
        return self.rows[i]

    def __add__(self, other: RingMatrix) -> RingMatrix:
        return RingMatrix(
            self.ring,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
        )

    def __sub__(self, other: RingMatrix) -> RingMatrix:
        return RingMatrix(
            self.ring,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
        )

    def __mul__(self, other):
        if isinstance(other, RingElement):
            return RingMatrix(self.ring, [[a * other for a in row] for row in self.rows])
        if self.ncols != other.nrows:
            raise PreconditionError("matrix dimension mismatch")
        cols = list(zip(*other.rows)) if other.rows else []
        out = []
        for row in self.rows:
            out.append([_dot(row, col, self.ring) for col in cols])
        return RingMatrix(self.ring, out)

    def __pow__(self, e: int) -> RingMatrix:
        if self.nrows != self.ncols:
            raise PreconditionError("matrix power needs a square matrix")
        result = RingMatrix.identity(self.ring, self.nrows)
        acc = self
        while e:
            if e & 1:
                result = result * acc
            acc = acc * acc
            e >>= 1
        return result

    def __neg__(self) -> RingMatrix:
        return RingMatrix(self.ring, [[-a for a in row] for row in self.rows])

    def transpose(self) -> RingMatrix:
        return RingMatrix(self.ring, list(zip(*self.rows)) if self.rows else [])

    def kron(self, other: RingMatrix) -> RingMatrix:
        """Kronecker (tensor) product, row-major blocks."""
        out = []
        for arow in self.rows:
            for brow in other.rows:
                out.append([a * b for a in arow for b in brow])
        return RingMatrix(self.ring, out)

    def trace(self) -> RingElement:
        if self.nrows != self.ncols:
            raise PreconditionError("trace needs a square matrix")
        acc = self.ring.zero
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def map_entries(self, fn, ring=None) -> RingMatrix:
        return RingMatrix(ring if ring is not None else self.ring, [[fn(a) for a in row] for row in self.rows])

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.rows for a in row)

    def __eq__(self, other) -> bool:
        return isinstance(other, RingMatrix) and self.ring == other.ring and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.ring, self.rows))

    def serialize(self) -> list:
        return [[a.serialize() for a in row] for row in self.rows]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(repr(a) for a in row) for row in self.rows)
        return f"RingMatrix[{body}]"


def _dot(u: Sequence[RingElement], v: Sequence[RingElement], ring: GaloisRing) -> RingElement:
    acc = ring.zero
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


def row_vector_times(v: Sequence[RingElement], M: RingMatrix) -> list[RingElement]:
    if len(v) != M.nrows:
        raise PreconditionError("vector/matrix dimension mismatch")
    return [_dot(v, col, M.ring) for col in zip(*M.rows)] if M.rows else []


# ---------------------------------------------------------------------------
# Howell normal form


class HowellBasis:
    """Canonical basis of a row module over the chain ring.

    ``matrix`` is in Howell form: pivot entries are plain powers p^k in
    strictly increasing column order, entries below a pivot are zero,
    entries above are reduced mod p^k, and the span of every trailing
    column section is witnessed by the rows themselves.
    """

    __slots__ = ("matrix", "pivots", "ncols")

    def __init__(self, matrix: RingMatrix, pivots: tuple[tuple[int, int], ...], ncols: int | None = None):
        self.matrix = matrix
        self.pivots = pivots  # (column, valuation) per row
        self.ncols = matrix.ncols if ncols is None else ncols

    @property
    def ring(self) -> GaloisRing:
        return self.matrix.ring

    @property
    def nrows(self) -> int:
        return self.matrix.nrows

    def span_size(self) -> int:
        size = 1
        r, m = self.ring.r, self.ring.m
        for _, k in self.pivots:
            size *= self.ring.p ** (m * (r - k))
        return size

    def reduce_vector(self, v: Sequence[RingElement]) -> list[RingElement]:
        """Reduce v against the basis; the remainder is zero iff v is in the span."""
        v = list(v)
        for row, (col, k) in zip(self.matrix.rows, self.pivots):
            e = v[col]
            if e.is_zero():
                continue
            if e.valuation() < k:
                continue
            q = e.divide_exact_by_p_power(k)
            for j in range(col, len(v)):
                v[j] = v[j] - q * row[j]
        return v

    def contains(self, v: Sequence[RingElement]) -> bool:
        return all(c.is_zero() for c in self.reduce_vector(v))

    def span(self) -> Iterator[list[RingElement]]:
        """All module elements (each exactly once)."""
        ring = self.ring
        n = self.ncols
        if not self.matrix.rows:
            yield [ring.zero] * n
            return
        ranges = []
        for _, k in self.pivots:
            ranges.append(ring.p ** (ring.r - k))
        total = 1
        for span_sz in ranges:
            total *= span_sz**ring.m
        for idx in range(total):
            v = [ring.zero] * n
            t = idx
            for row, bound in zip(self.matrix.rows, ranges):
                coeffs = []
                for _ in range(ring.m):
                    coeffs.append(t % bound)
                    t //= bound
                c = ring.element(coeffs)
                if not c.is_zero():
                    v = [a + c * b for a, b in zip(v, row)]
            yield v

    def __eq__(self, other) -> bool:
        return isinstance(other, HowellBasis) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def serialize(self) -> list:
        return self.matrix.serialize()


def howell_form(M: RingMatrix | Sequence[Sequence[RingElement]], ring: GaloisRing | None = None) -> HowellBasis:
    """Canonical Howell basis of the row module of M."""
    if isinstance(M, RingMatrix):
        ring = M.ring
        work = [list(row) for row in M.rows]
        ncols = M.ncols
    else:
        work = [list(row) for row in M]
        if ring is None:
            if not work:
                raise PreconditionError("cannot infer ring from an empty row list")
            ring = work[0][0].ring
        ncols = len(work[0]) if work else 0
    r = ring.r

    pivot_row: dict[int, list[RingElement]] = {}
    pivot_val: dict[int, int] = {}
    queue = [row for row in work if any(not a.is_zero() for a in row)]
    guard = 0
    while queue:
        guard += 1
        if guard > 10000 * (len(work) + 1) * (r + 1):
            raise AssertionError("Howell reduction failed to terminate")
        v = queue.pop()
        c = 0
        while c < ncols:
            if v[c].is_zero():
                c += 1
                continue
            kv = v[c].valuation()
            if c not in pivot_row:
                u, kv = v[c].unit_part()
                uinv = u.inverse()
                v = [a * uinv for a in v]
                pivot_row[c] = v
                pivot_val[c] = kv
                if kv > 0:
                    pk = ring.p_power(r - kv)
                    queue.append([a * pk for a in v])
                break
            kw = pivot_val[c]
            if kv < kw:
                u, kv = v[c].unit_part()
                uinv = u.inverse()
                v = [a * uinv for a in v]
                old = pivot_row[c]
                pivot_row[c] = v
                pivot_val[c] = kv
                queue.append(old)
                if kv > 0:
                    pk = ring.p_power(r - kv)
                    queue.append([a * pk for a in v])
                break
            q = v[c].divide_exact_by_p_power(kw)
            w = pivot_row[c]
            v = [a - q * b for a, b in zip(v, w)]
            # column c is now zero; continue scanning right

    cols = sorted(pivot_row)
    rows = [pivot_row[c] for c in cols]
    # canonical reduction of entries above each pivot
    for idx, c in enumerate(cols):
        k = pivot_val[c]
        pk = ring.p**k
        for above in range(idx):
            e = rows[above][c]
            canon = ring.element([x % pk for x in e.coeffs])
            q = (e - canon).divide_exact_by_p_power(k)
            if not q.is_zero():
                rows[above] = [a - q * b for a, b in zip(rows[above], rows[idx])]
    pivots = tuple((c, pivot_val[c]) for c in cols)
    return HowellBasis(RingMatrix(ring, rows), pivots, ncols)


def howell_from_vectors(vectors: Sequence[Sequence[RingElement]], ring: GaloisRing, ncols: int) -> HowellBasis:
    if not vectors:
        return HowellBasis(RingMatrix(ring, []), (), ncols)
    return howell_form(vectors, ring)


# ---------------------------------------------------------------------------
# Smith-style diagonalization and its consumers


def smith_decomposition(M: RingMatrix):
    """U, V invertible with U*M*V = diag(p^k_1, ..., p^k_s) (rest zero).

    Returns (U, V, diag_vals, det_u, det_v) where diag_vals are the pivot
    valuations k_i in the order produced and det_u, det_v are the (unit)
    determinants of U and V.
    """
    ring = M.ring
    r = ring.r
    A = [list(row) for row in M.rows]
    nrows, ncols = M.nrows, M.ncols
    U = [list(row) for row in RingMatrix.identity(ring, nrows).rows]
    V = [list(row) for row in RingMatrix.identity(ring, ncols).rows]
    det_u = ring.one
    det_v = ring.one
    diag: list[int] = []
    for t in range(min(nrows, ncols)):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if A[i][j].is_zero():
                    continue
                kv = A[i][j].valuation()
                if best is None or kv < best[0]:
                    best = (kv, i, j)
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        k, bi, bj = best
        if bi != t:
            A[t], A[bi] = A[bi], A[t]
            U[t], U[bi] = U[bi], U[t]
            det_u = -det_u
        if bj != t:
            for row in A:
                row[t], row[bj] = row[bj], row[t]
            for row in V:
                row[t], row[bj] = row[bj], row[t]
            det_v = -det_v
        u, _ = A[t][t].unit_part()
        uinv = u.inverse()
        A[t] = [a * uinv for a in A[t]]
        U[t] = [a * uinv for a in U[t]]
        det_u = det_u * uinv
        # clear row t to the right (column ops), then column t below (row ops)
        for j in range(t + 1, ncols):
            e = A[t][j]
            if e.is_zero():
                continue
            q = e.divide_exact_by_p_power(k)
            for row in A:
                row[j] = row[j] - q * row[t]
            for row in V:
                row[j] = row[j] - q * row[t]
        for i in range(t + 1, nrows):
            e = A[i][t]
            if e.is_zero():
                continue
            q = e.divide_exact_by_p_power(k)
            A[i] = [a - q * b for a, b in zip(A[i], A[t])]
            U[i] = [a - q * b for a, b in zip(U[i], U[t])]
        diag.append(k)
    return RingMatrix(ring, U), RingMatrix(ring, V), diag, det_u, det_v


def det(M: RingMatrix) -> RingElement:
    if M.nrows != M.ncols:
        raise PreconditionError("determinant needs a square matrix")
    ring = M.ring
    if M.nrows == 0:
        return ring.one
    U, V, diag, det_u, det_v = smith_decomposition(M)
    acc = ring.one
    for k in diag:
        acc = acc * ring.p_power(k)
    if len(diag) < M.nrows:
        acc = ring.zero
    return det_u.inverse() * acc * det_v.inverse()


def matrix_inverse(M: RingMatrix) -> RingMatrix:
    """Gauss-Jordan with unit pivots; raises SingularMatrixError (with the
    determinant attached) when det is not a unit."""
    if M.nrows != M.ncols:
        raise PreconditionError("inverse needs a square matrix")
    ring = M.ring
    n = M.nrows
    A = [list(row) + list(irow) for row, irow in zip(M.rows, RingMatrix.identity(ring, n).rows)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if A[i][col].is_unit():
                piv = i
                break
        if piv is None:
            raise SingularMatrixError("matrix is singular over the local ring", det=det(M))
        A[col], A[piv] = A[piv], A[col]
        inv = A[col][col].inverse()
        A[col] = [a * inv for a in A[col]]
        for i in range(n):
            if i != col and not A[i][col].is_zero():
                q = A[i][col]
                A[i] = [a - q * b for a, b in zip(A[i], A[col])]
    return RingMatrix(ring, [row[n:] for row in A])


def kernel(M: RingMatrix) -> HowellBasis:
    """Howell basis of the left kernel {v : v M = 0}."""
    ring = M.ring
    if M.nrows == 0:
        return HowellBasis(RingMatrix(ring, []), (), 0)
    U, _, diag, _, _ = smith_decomposition(M)
    gens: list[list[RingElement]] = []
    for t, k in enumerate(diag):
        if k > 0:
            pk = ring.p_power(ring.r - k)
            gens.append([a * pk for a in U.rows[t]])
    for t in range(len(diag), M.nrows):
        gens.append(list(U.rows[t]))
    if not gens:
        return HowellBasis(RingMatrix(ring, []), (), M.nrows)
    return howell_form(gens, ring)


def solve_left(M: RingMatrix, target: Sequence[RingElement]) -> list[RingElement] | None:
    """One solution v of v M = target, or None when the system is unsolvable."""
    ring = M.ring
    if len(target) != M.ncols:
        raise PreconditionError("target length mismatch")
    U, V, diag, _, _ = smith_decomposition(M)
    s = row_vector_times(list(target), V)
    w = [ring.zero] * M.nrows
    for t in range(M.ncols):
        if t < len(diag):
            k = diag[t]
            if s[t].valuation() < k:
                return None
            w[t] = s[t].divide_exact_by_p_power(k)
        elif not s[t].is_zero():
            return None
    return row_vector_times(w, U)


def is_monomial(M: RingMatrix) -> tuple[bool, tuple[tuple[int, ...], tuple[RingElement, ...]] | None]:
    """True iff M has exactly one nonzero entry per row and column, each a
    unit.  The witness maps row i to (permutation[i], units[i])."""
    if M.nrows != M.ncols:
        raise PreconditionError("monomial test needs a square matrix")
    n = M.nrows
    perm: list[int] = []
    units: list[RingElement] = []
    seen = set()
    for i in range(n):
        nz = [(j, a) for j, a in enumerate(M.rows[i]) if not a.is_zero()]
        if len(nz) != 1:
            return False, None
        j, a = nz[0]
        if not a.is_unit() or j in seen:
            return False, None
        seen.add(j)
        perm.append(j)
        units.append(a)
    return True, (tuple(perm), tuple(units))
