"""Exact arithmetic in Galois rings GR(p^r, m) and their residue fields.

A Galois ring is Z_{p^r}[y]/<h(y)> for a monic polynomial h of degree m
whose reduction mod p is irreducible over F_p; m = 1 gives Z_{p^r}.
Elements are stored as ascending coefficient vectors of length m with
entries in [0, p^r).  Every element is a unit or nilpotent; the maximal
ideal is <p> and the residue field is F_{p^m}.

All values here are immutable and all operations are pure, so concurrent
use is safe.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .errors import PreconditionError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# Raw polynomial helpers over F_p (integer coefficient lists, ascending).
# Used only to pick a deterministic modulus before any field object exists.


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _polmul_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _polmod_p(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    # f monic
    a = list(a)
    n = len(f) - 1
    while len(a) > n:
        c = a.pop()
        if c:
            for i in range(n):
                a[len(a) - n + i] = (a[len(a) - n + i] - c * f[i]) % p
    return _trim(a)


def _polgcd_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        inv = pow(b[-1], p - 2, p)
        bm = [(c * inv) % p for c in b]
        a, b = b, _polmod_p(a, bm, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _polpow_mod_p(base: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    acc = _polmod_p(base, f, p)
    while e:
        if e & 1:
            result = _polmod_p(_polmul_p(result, acc, p), f, p)
        acc = _polmod_p(_polmul_p(acc, acc, p), f, p)
        e >>= 1
    return result


def _is_irreducible_p(f: Sequence[int], p: int) -> bool:
    """Rabin irreducibility test for a monic f over F_p."""
    m = len(f) - 1
    if m < 1:
        return False
    x = [0, 1]
    # x^(p^m) == x mod f
    if _polpow_mod_p(x, p**m, f, p) != _polmod_p(x, f, p):
        return False
    for ell in {d for d in range(2, m + 1) if m % d == 0 and is_prime(d)}:
        h = _polpow_mod_p(x, p ** (m // ell), f, p)
        diff = _trim([(h[i] if i < len(h) else 0) - (x[i] if i < len(x) else 0) for i in range(max(len(h), 2))])
        diff = [c % p for c in diff]
        if len(_polgcd_p(diff, f, p)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """The first monic irreducible of degree m over F_p, ordering monic
    polynomials by their low-coefficient tuple (c0, ..., c_{m-1})."""
    for k in range(p**m):
        coeffs = []
        t = k
        for _ in range(m):
            coeffs.append(t % p)
            t //= p
        f = coeffs + [1]
        if _is_irreducible_p(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------


class FieldElement:
    """Element of the residue field F_{p^m}, stored as m residues mod p."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ResidueField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_unit(self) -> bool:
        return not self.is_zero()

    def int_key(self) -> int:
        """Integer encoding sum(c_i * p^i); fixes element orderings."""
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.field.p + c
        return k

    def __add__(self, other: FieldElement) -> FieldElement:
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: FieldElement) -> FieldElement:
        p = self.field.p
        return FieldElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> FieldElement:
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            p = self.field.p
            return FieldElement(self.field, tuple((a * other) % p for a in self.coeffs))
        return self.field._mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> FieldElement:
        result = self.field.one
        acc = self
        while e:
            if e & 1:
                result = result * acc
            acc = acc * acc
            e >>= 1
        return result

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise PreconditionError("zero has no inverse")
        q = self.field.p ** self.field.m
        return self ** (q - 2)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldElement) and self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((id(self.field), self.coeffs))

    def serialize(self):
        if self.field.m == 1:
            return self.coeffs[0]
        return list(self.coeffs)

    def __repr__(self) -> str:
        return f"FieldElement{self.coeffs}"


class ResidueField:
    """The residue field F_{p^m} of a Galois ring."""

    def __init__(self, p: int, m: int, modulus: tuple[int, ...] | None):
        self.p = p
        self.m = m
        # ascending, length m+1, monic; None only while m == 1
        self.modulus = modulus if m > 1 else (0, 1)
        self.zero = FieldElement(self, (0,) * m)
        self.one = FieldElement(self, (1,) + (0,) * (m - 1))

    @property
    def order(self) -> int:
        return self.p**self.m

    def element(self, coeffs: int | Sequence[int]) -> FieldElement:
        if isinstance(coeffs, int):
            coeffs = [coeffs] + [0] * (self.m - 1)
        coeffs = list(coeffs) + [0] * (self.m - len(coeffs))
        return FieldElement(self, tuple(c % self.p for c in coeffs[: self.m]))

    def from_int_key(self, k: int) -> FieldElement:
        coeffs = []
        for _ in range(self.m):
            coeffs.append(k % self.p)
            k //= self.p
        return FieldElement(self, tuple(coeffs))

    def elements(self) -> Iterator[FieldElement]:
        for k in range(self.order):
            yield self.from_int_key(k)

    def _mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        prod = _polmul_p(a.coeffs, b.coeffs, self.p)
        red = _polmod_p(prod, self.modulus, self.p)
        red = red + [0] * (self.m - len(red))
        return FieldElement(self, tuple(red))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ResidueField)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"F_{self.p}^{self.m}" if self.m > 1 else f"F_{self.p}"


class RingElement:
    """Element of GR(p^r, m) as an ascending coefficient vector mod p^r."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: GaloisRing, coeffs: tuple[int, ...]):
        self.ring = ring
        self.coeffs = coeffs

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_unit(self) -> bool:
        p = self.ring.p
        return any(c % p != 0 for c in self.coeffs)

    def valuation(self) -> int:
        """Largest k <= r with self in <p^k>; the zero element has value r."""
        p, r = self.ring.p, self.ring.r
        v = r
        for c in self.coeffs:
            if c == 0:
                continue
            k = 0
            while c % p == 0:
                c //= p
                k += 1
            v = min(v, k)
        return v

    def residue(self) -> FieldElement:
        p = self.ring.p
        return FieldElement(self.ring.residue_field, tuple(c % p for c in self.coeffs))

    def int_key(self) -> int:
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.ring.q + c
        return k

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: RingElement) -> RingElement:
        q = self.ring.q
        return RingElement(self.ring, tuple((a + b) % q for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: RingElement) -> RingElement:
        q = self.ring.q
        return RingElement(self.ring, tuple((a - b) % q for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> RingElement:
        q = self.ring.q
        return RingElement(self.ring, tuple((-a) % q for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            q = self.ring.q
            return RingElement(self.ring, tuple((a * other) % q for a in self.coeffs))
        return self.ring._mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> RingElement:
        result = self.ring.one
        acc = self
        while e:
            if e & 1:
                result = result * acc
            acc = acc * acc
            e >>= 1
        return result

    def inverse(self) -> RingElement:
        """Invert a unit: invert the residue, then Newton-lift v <- v(2-uv)."""
        if not self.is_unit():
            raise PreconditionError(f"{self!r} is not a unit")
        v = self.ring.lift_field(self.residue().inverse())
        two = self.ring.element(2)
        for _ in range(self.ring.r.bit_length() + 1):
            uv = self * v
            if uv == self.ring.one:
                return v
            v = v * (two - uv)
        if self * v == self.ring.one:
            return v
        raise AssertionError("unit inversion failed to converge")

    def divide_exact_by_p_power(self, k: int) -> RingElement:
        """Exact quotient by p^k; requires valuation >= k."""
        pk = self.ring.p**k
        if any(c % pk for c in self.coeffs):
            raise PreconditionError("element is not divisible by p^%d" % k)
        return RingElement(self.ring, tuple(c // pk for c in self.coeffs))

    def unit_part(self) -> tuple[RingElement, int]:
        """Write self = u * p^k with u a unit (for self != 0)."""
        k = self.valuation()
        if k == self.ring.r:
            raise PreconditionError("zero has no unit part")
        return self.divide_exact_by_p_power(k), k

    def __eq__(self, other) -> bool:
        return isinstance(other, RingElement) and self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring.p, self.ring.r, self.ring.m, self.coeffs))

    def __repr__(self) -> str:
        if self.ring.m == 1:
            return str(self.coeffs[0])
        return f"({self.pretty()})"

    def pretty(self, gen: str = "y") -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else str(c)
                terms.append(f"{head}{gen}" + (f"^{i}" if i > 1 else ""))
        return " + ".join(terms) if terms else "0"

    def serialize(self):
        """JSON form: bare int when m = 1, else the coefficient list."""
        if self.ring.m == 1:
            return self.coeffs[0]
        return list(self.coeffs)


class GaloisRing:
    """The chain ring GR(p^r, m); GR(p^r, 1) is Z_{p^r}."""

    def __init__(self, p: int, r: int, m: int, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise PreconditionError(f"p = {p} is not prime")
        if r < 1 or m < 1:
            raise PreconditionError("r and m must be positive")
        self.p = p
        self.r = r
        self.m = m
        self.q = p**r
        if m == 1:
            self.modulus = None
        elif modulus is None:
            self.modulus = _smallest_irreducible(p, m)
        else:
            modulus = tuple(c % self.q for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise PreconditionError("modulus must be monic of degree m")
            if not _is_irreducible_p([c % p for c in modulus], p):
                raise PreconditionError("modulus is not irreducible mod p")
            self.modulus = modulus
        self.residue_field = ResidueField(
            p, m, None if m == 1 else tuple(c % p for c in self.modulus)
        )
        self.zero = RingElement(self, (0,) * m)
        self.one = RingElement(self, (1,) + (0,) * (m - 1))

    @property
    def order(self) -> int:
        return self.q**self.m

    def element(self, coeffs: int | Sequence[int]) -> RingElement:
        if isinstance(coeffs, int):
            coeffs = [coeffs] + [0] * (self.m - 1)
        coeffs = list(coeffs) + [0] * (self.m - len(coeffs))
        if len(coeffs) > self.m:
            raise PreconditionError("element vector longer than m")
        return RingElement(self, tuple(c % self.q for c in coeffs))

    def generator(self) -> RingElement:
        if self.m == 1:
            raise PreconditionError("Z_{p^r} has no polynomial generator")
        return RingElement(self, (0, 1) + (0,) * (self.m - 2))

    def from_int_key(self, k: int) -> RingElement:
        coeffs = []
        for _ in range(self.m):
            coeffs.append(k % self.q)
            k //= self.q
        return RingElement(self, tuple(coeffs))

    def elements(self) -> Iterator[RingElement]:
        for k in range(self.order):
            yield self.from_int_key(k)

    def units(self) -> Iterator[RingElement]:
        for a in self.elements():
            if a.is_unit():
                yield a

    def lift_field(self, a: FieldElement) -> RingElement:
        """Trivial (coefficientwise) lift of a residue-field element."""
        return RingElement(self, tuple(a.coeffs))

    def _mul(self, a: RingElement, b: RingElement) -> RingElement:
        q = self.q
        if self.m == 1:
            return RingElement(self, ((a.coeffs[0] * b.coeffs[0]) % q,))
        out = [0] * (2 * self.m - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    out[i + j] = (out[i + j] + x * y) % q
        # reduce by the monic modulus
        for d in range(len(out) - 1, self.m - 1, -1):
            c = out[d]
            if c:
                out[d] = 0
                for i in range(self.m):
                    out[d - self.m + i] = (out[d - self.m + i] - c * self.modulus[i]) % q
        return RingElement(self, tuple(out[: self.m]))

    def p_power(self, k: int) -> RingElement:
        return self.element(self.p**k)

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        d = {"p": self.p, "r": self.r, "m": self.m}
        if self.m > 1:
            d["modulus"] = list(self.modulus)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> GaloisRing:
        modulus = tuple(d["modulus"]) if "modulus" in d and d.get("m", 1) > 1 else None
        return cls(int(d["p"]), int(d["r"]), int(d["m"]), modulus)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GaloisRing)
            and (self.p, self.r, self.m, self.modulus) == (other.p, other.r, other.m, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.r, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"Z_{self.q}"
        return f"GR({self.q},{self.m})"


def construct_ring(p: int, r: int, m: int) -> GaloisRing:
    """GR(p^r, m) with the deterministic lexicographically-smallest modulus."""
    return GaloisRing(p, r, m)


class RingEmbedding:
    """Unital ring morphism GR(p^r, m) -> GR(p^r, M) with m | M, determined
    by the image of the source power-basis generator."""

    def __init__(self, source: GaloisRing, target: GaloisRing, generator_image: RingElement):
        if (source.p, source.r) != (target.p, target.r) or target.m % source.m != 0:
            raise PreconditionError("incompatible ring specs for embedding")
        self.source = source
        self.target = target
        self.generator_image = generator_image
        powers = [target.one]
        for _ in range(source.m - 1):
            powers.append(powers[-1] * generator_image)
        self._powers = tuple(powers)

    def generator_powers(self) -> tuple[RingElement, ...]:
        """Images of 1, y, ..., y^{m-1}; an R-basis certificate of the image."""
        return self._powers

    def __call__(self, a: RingElement) -> RingElement:
        if a.ring != self.source:
            raise PreconditionError("element not in the embedding source")
        acc = self.target.zero
        for c, gp in zip(a.coeffs, self._powers):
            if c:
                acc = acc + gp * c
        return acc

    def preimage(self, b: RingElement) -> RingElement | None:
        """The source element mapping to b, or None if b is outside the image."""
        from .linalg import RingMatrix, solve_left

        if b.ring != self.target:
            raise PreconditionError("element not in the embedding target")
        base = GaloisRing(self.source.p, self.source.r, 1)
        rows = [[base.element(c) for c in gp.coeffs] for gp in self._powers]
        sol = solve_left(RingMatrix(base, rows), [base.element(c) for c in b.coeffs])
        if sol is None:
            return None
        return self.source.element([c.coeffs[0] for c in sol])


def identity_embedding(ring: GaloisRing) -> RingEmbedding:
    gen = ring.generator() if ring.m > 1 else ring.one
    return RingEmbedding(ring, ring, gen)


def build_embedding(source: GaloisRing, target: GaloisRing) -> RingEmbedding:
    """Embed GR(p^r, m) into GR(p^r, M): find the first root of the source
    modulus in the target residue field and Newton-lift it."""
    if source == target:
        return identity_embedding(source)
    if source.m == 1:
        return RingEmbedding(source, target, target.one)
    F = target.residue_field
    resmod = [c % source.p for c in source.modulus]
    root_res = None
    for a in F.elements():
        acc = F.zero
        for c in reversed(resmod):
            acc = acc * a + F.element(c)
        if acc.is_zero():
            root_res = a
            break
    if root_res is None:
        raise PreconditionError("source modulus has no root in the target")
    g = target.lift_field(root_res)
    g = _newton_lift_root(g, [target.element(c) for c in source.modulus])
    return RingEmbedding(source, target, g)


def _newton_lift_root(alpha: RingElement, poly: list[RingElement]) -> RingElement:
    """Lift a simple residue root of an ascending-coefficient polynomial to an
    exact root mod p^r via alpha <- alpha - f(alpha)/f'(alpha)."""
    ring = alpha.ring
    deriv = [poly[i] * i for i in range(1, len(poly))]

    def evaluate(cs: list[RingElement], x: RingElement) -> RingElement:
        acc = ring.zero
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    for _ in range(ring.r.bit_length() + 1):
        fx = evaluate(poly, alpha)
        if fx.is_zero():
            return alpha
        alpha = alpha - fx * evaluate(deriv, alpha).inverse()
    if evaluate(poly, alpha).is_zero():
        return alpha
    raise AssertionError("Newton lifting failed: root is not simple")
