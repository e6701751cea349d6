"""Factorization over GR(p^r, m): residue factorization, Hensel lifting,
splitting extensions with an ordered root list, and primitive idempotents.

Only moduli whose residue image is squarefree are supported; everything
else is rejected with RepeatedResidueRootsError, since the whole transform
theory needs simple roots.  The one source of randomness (equal-degree
splitting) is a per-call generator seeded by the caller, and the factor
list is canonically sorted afterwards, so results are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import PreconditionError, RepeatedResidueRootsError
from .poly import Polynomial, pow_mod
from .quotient import AmbientSpace, QuotElement
from .rings import (
    GaloisRing,
    RingElement,
    RingEmbedding,
    _newton_lift_root,
    build_embedding,
    construct_ring,
    identity_embedding,
)

#: brute-force root scans are capped at this residue-field size
MAX_SCAN_FIELD = 1 << 22


@dataclass(frozen=True)
class Factorization:
    """f = product of monic pairwise-coprime lifts of the residue factors."""

    f: Polynomial
    factors: tuple[Polynomial, ...]
    residue_factors: tuple[Polynomial, ...]

    def cofactor(self, i: int) -> Polynomial:
        """Product of all factors except the i-th."""
        out = Polynomial(self.f.parent, [self.f.parent.one])
        for j, g in enumerate(self.factors):
            if j != i:
                out = out * g
        return out


@dataclass(frozen=True)
class SplittingData:
    """An extension GR(p^r, m*l) where f splits, with a fixed root order.

    Roots are ordered by the integer encoding of their residue coordinates,
    which is also the scan order used to find them; the ordering (and hence
    every transform built on it) is reproducible bit for bit.
    """

    f: Polynomial
    extension: GaloisRing
    embedding: RingEmbedding
    roots: tuple[RingElement, ...]

    @property
    def n(self) -> int:
        return len(self.roots)


@dataclass(frozen=True)
class IdempotentSet:
    """Complete set of primitive pairwise-orthogonal idempotents of R[x]/<f>,
    aligned with the factorization (idempotents[i] kills every factor but
    factors[i])."""

    ambient: AmbientSpace
    idempotents: tuple[QuotElement, ...]
    factorization: Factorization


def residue_squarefree(f: Polynomial) -> bool:
    """True iff the residue of f has distinct roots (gcd(fbar, fbar') = 1)."""
    if not f.is_monic():
        raise PreconditionError("modulus must be monic")
    fbar = f.residue()
    return fbar.gcd(fbar.derivative()).degree == 0


def _require_squarefree(f: Polynomial) -> None:
    if not residue_squarefree(f):
        raise RepeatedResidueRootsError(
            "the residue of %s has repeated roots; only separable moduli are supported" % f.pretty()
        )


def factor_residue(fbar: Polynomial, seed: int = 0) -> list[Polynomial]:
    """Irreducible factorization of a squarefree monic polynomial over
    F_{p^m}: distinct-degree then equal-degree (Cantor-Zassenhaus) splitting,
    canonically sorted."""
    F = fbar.parent
    if not fbar.is_monic():
        raise PreconditionError("residue factorization needs a monic input")
    if not fbar.is_squarefree():
        raise PreconditionError("residue factorization needs a squarefree input")
    rng = random.Random(seed)
    q = F.order
    x = Polynomial.x_power(F, 1)
    factors: list[Polynomial] = []
    rest = fbar
    h = x
    d = 0
    while rest.degree > 0:
        d += 1
        if rest.degree < 2 * d:
            factors.append(rest)
            break
        h = pow_mod(h, q, rest)
        g = rest.gcd(h - x)
        if g.degree > 0:
            factors.extend(_equal_degree_factor(g, d, rng))
            rest = rest.divmod(g)[0]
            h = h % rest
    factors.sort(key=lambda g: g.sort_key())
    return factors


def _equal_degree_factor(g: Polynomial, d: int, rng: random.Random) -> list[Polynomial]:
    """Split a product of distinct irreducibles, all of degree d."""
    F = g.parent
    if g.degree == d:
        return [g]
    q = F.order
    n = g.degree
    while True:
        a = Polynomial(F, [F.from_int_key(rng.randrange(q)) for _ in range(n)])
        if a.degree < 1:
            continue
        c = g.gcd(a)
        if 0 < c.degree < n:
            split = c
        else:
            if F.p == 2:
                # trace map over F_2: a + a^2 + ... + a^(2^(d*m-1))
                b = a % g
                t = b
                for _ in range(d * F.m - 1):
                    b = pow_mod(b, 2, g)
                    t = t + b
                b = t % g
            else:
                b = pow_mod(a, (q**d - 1) // 2, g) - Polynomial(F, [F.one])
            split = g.gcd(b)
            if not (0 < split.degree < n):
                continue
        left = _equal_degree_factor(split, d, rng)
        right = _equal_degree_factor(g.divmod(split)[0], d, rng)
        return left + right


def _hensel_step(f: Polynomial, g: Polynomial, h: Polynomial, s: Polynomial, t: Polynomial):
    """One quadratic lift: from f = gh and sg + th = 1 (mod p^k) to the same
    congruences mod p^2k.  All arithmetic is carried mod p^r throughout."""
    e = f - g * h
    q, rem = (s * e).divmod(h)
    g1 = g + t * e + q * g
    h1 = h + rem
    b = s * g1 + t * h1 - Polynomial(f.parent, [f.parent.one])
    c, d = (s * b).divmod(h1)
    s1 = s - d
    t1 = t - t * b - c * g1
    return g1, h1, s1, t1


def _hensel_pair(f: Polynomial, gbar: Polynomial, hbar: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Lift a coprime residue split fbar = gbar * hbar to f = G * H exactly."""
    ring = f.parent
    one, sbar, tbar = gbar.xgcd(hbar)
    if one.degree != 0:
        raise PreconditionError("residue factors are not coprime")
    g, h = gbar.lift(ring), hbar.lift(ring)
    s, t = sbar.lift(ring), tbar.lift(ring)
    k = 1
    while k < ring.r:
        g, h, s, t = _hensel_step(f, g, h, s, t)
        k *= 2
    if not (g * h == f and g.is_monic() and h.is_monic()):
        raise AssertionError("Hensel lifting failed to converge")
    return g, h


def hensel_lift(f: Polynomial, residue_factors: list[Polynomial]) -> Factorization:
    """Lift pairwise-coprime monic residue factors of fbar to monic factors
    of f with an exact product."""
    _require_squarefree(f)
    check = Polynomial(f.parent.residue_field, [f.parent.residue_field.one])
    for g in residue_factors:
        check = check * g
    if check != f.residue():
        raise PreconditionError("residue factors do not multiply to the residue of f")
    factors: list[Polynomial] = []
    cur = f
    rest = list(residue_factors)
    while len(rest) > 1:
        gbar = rest.pop(0)
        hbar = Polynomial(gbar.parent, [gbar.parent.one])
        for g in rest:
            hbar = hbar * g
        G, H = _hensel_pair(cur, gbar, hbar)
        factors.append(G)
        cur = H
    factors.append(cur)
    prod = Polynomial(f.parent, [f.parent.one])
    for g in factors:
        prod = prod * g
    if prod != f:
        raise AssertionError("lifted factors do not multiply back to f")
    return Factorization(f, tuple(factors), tuple(residue_factors))


def factor_polynomial(f: Polynomial, seed: int = 0) -> Factorization:
    """Full pipeline: residue factorization followed by Hensel lifting."""
    _require_squarefree(f)
    return hensel_lift(f, factor_residue(f.residue(), seed=seed))


def splitting_degree(f: Polynomial, seed: int = 0) -> int:
    """lcm of the degrees of the residue factors: the extension degree over
    the base ring needed for f to split."""
    _require_squarefree(f)
    l = 1
    for g in factor_residue(f.residue(), seed=seed):
        l = l * g.degree // _gcd(l, g.degree)
    return l


def splitting_data(
    f: Polynomial,
    seed: int = 0,
    extension: GaloisRing | None = None,
    embedding: RingEmbedding | None = None,
) -> SplittingData:
    """The smallest Galois-ring extension where f splits, plus the ordered
    exact roots (Newton-lifted from the residue roots).

    A larger extension may be supplied (with its embedding) when several
    polynomials must split over one common ring.
    """
    _require_squarefree(f)
    ring = f.parent
    if extension is None:
        l = splitting_degree(f, seed=seed)
        ext = ring if l == 1 else construct_ring(ring.p, ring.r, ring.m * l)
        emb = identity_embedding(ring) if ext == ring else build_embedding(ring, ext)
    else:
        ext = extension
        emb = embedding if embedding is not None else (
            identity_embedding(ring) if ext == ring else build_embedding(ring, ext)
        )
        if emb.source != ring or emb.target != ext:
            raise PreconditionError("embedding does not match ring and extension")
    f_ext = [emb(c) for c in f.padded(f.degree + 1)]
    F = ext.residue_field
    if F.order > MAX_SCAN_FIELD:
        raise PreconditionError("splitting field too large for the root scan")
    fbar_ext = [c.residue() for c in f_ext]
    roots: list[RingElement] = []
    for a in F.elements():
        acc = F.zero
        for c in reversed(fbar_ext):
            acc = acc * a + c
        if acc.is_zero():
            roots.append(_newton_lift_root(ext.lift_field(a), f_ext))
    if len(roots) != f.degree:
        raise AssertionError("expected %d roots, found %d" % (f.degree, len(roots)))
    return SplittingData(f, ext, emb, tuple(roots))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def primitive_idempotents(target: Polynomial | AmbientSpace, seed: int = 0) -> IdempotentSet:
    """The unique complete set of primitive pairwise-orthogonal idempotents
    of R[x]/<f>, one per factor of f.

    Each residue idempotent comes from an extended-Euclid certificate on
    (fbar_i, fbar/fbar_i) and is lifted by the Newton iteration
    e <- 3e^2 - 2e^3; completeness and orthogonality are verified exactly
    before returning.
    """
    if isinstance(target, AmbientSpace):
        ambient, f = target, target.f
    else:
        f = target
        ambient = AmbientSpace(f.parent, f)
    _require_squarefree(f)
    fact = factor_polynomial(f, seed=seed)
    fbar = f.residue()
    idems: list[QuotElement] = []
    for gbar in fact.residue_factors:
        hbar = fbar.divmod(gbar)[0]
        one, s, t = gbar.xgcd(hbar)
        if one.degree != 0:
            raise AssertionError("factors are not coprime over the residue field")
        ebar = (t * hbar) % fbar
        e = ambient.from_poly(ebar.lift(ambient.ring))
        for _ in range(ambient.ring.r.bit_length() + 1):
            if e * e == e:
                break
            e = e * e * (3 * ambient.one - 2 * e)
        if not (e * e == e):
            raise AssertionError("idempotent lifting failed to converge")
        idems.append(e)
    total = ambient.zero
    for e in idems:
        total = total + e
    if total != ambient.one:
        raise AssertionError("idempotents do not sum to 1")
    for i, a in enumerate(idems):
        for b in idems[i + 1 :]:
            if not (a * b).is_zero():
                raise AssertionError("idempotents are not pairwise orthogonal")
    return IdempotentSet(ambient, tuple(idems), fact)
