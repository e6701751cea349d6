"""DFT invertibility, Vandermonde machinery, evaluation transform."""

import random

import pytest

from polycodes.errors import NotAnImageError, PreconditionError
from polycodes.factor import SplittingData, splitting_data
from polycodes.linalg import RingMatrix, row_vector_times
from polycodes.poly import Polynomial
from polycodes.quotient import AmbientSpace, regular_representation
from polycodes.rings import construct_ring, identity_embedding
from polycodes.transform import (
    Spectrum,
    dft_invertible,
    ms_inverse,
    ms_transform,
    vandermonde,
    vandermonde_inverse_symbolic,
)
from polycodes.zmod import IntegersMod

Z4 = construct_ring(2, 2, 1)
F_CYCLIC = Polynomial.from_ints(Z4, [3, 0, 0, 1])


def test_dft_z15_counterexample():
    Z15 = IntegersMod(15)
    rep = dft_invertible(Z15.element(2), 4)
    assert not rep.invertible
    assert rep.witness_exponent == 2
    assert rep.witness_value == Z15.element(3)


def test_dft_invertible_cases():
    assert dft_invertible(IntegersMod(5).element(2), 4).invertible
    Z9 = construct_ring(3, 2, 1)
    assert dft_invertible(Z9.element(8), 2).invertible


def test_dft_preconditions():
    Z15 = IntegersMod(15)
    with pytest.raises(PreconditionError):
        dft_invertible(Z15.element(1), 4)
    with pytest.raises(PreconditionError):
        dft_invertible(Z15.element(2), 3)


def test_dft_divisor_closure():
    # whenever xi gives an invertible DFT of length N, xi^(N/L) does for L | N
    for modulus in (5, 7, 13, 17):
        Z = IntegersMod(modulus)
        for xi in range(2, modulus):
            for N in range(2, modulus):
                e = Z.element(xi)
                if e**N != Z.one or e == Z.one:
                    continue
                try:
                    rep = dft_invertible(e, N)
                except PreconditionError:
                    continue
                if not rep.invertible:
                    continue
                for L in range(2, N):
                    if N % L == 0:
                        sub = e ** (N // L)
                        assert dft_invertible(sub, L).invertible


def test_vandermonde_cyclic_example():
    split = splitting_data(F_CYCLIC)
    pair = vandermonde(split)
    assert pair.V.serialize() == [
        [[1, 0], [1, 0], [1, 0]],
        [[1, 0], [0, 1], [3, 3]],
        [[1, 0], [3, 3], [0, 1]],
    ]
    n = split.n
    assert pair.V * pair.V_inv == RingMatrix.identity(split.extension, n)


def test_vandermonde_single_root():
    split = splitting_data(Polynomial.from_ints(Z4, [1, 1]))
    pair = vandermonde(split)
    assert pair.V.serialize() == [[1]]
    assert pair.V_inv.serialize() == [[1]]


def test_vandermonde_z9():
    Z9 = construct_ring(3, 2, 1)
    split = splitting_data(Polynomial.from_ints(Z9, [8, 0, 1]))
    pair = vandermonde(split)
    assert pair.V.serialize() == [[1, 1], [1, 8]]
    assert pair.V * pair.V_inv == RingMatrix.identity(Z9, 2)


def test_vandermonde_rejects_repeated_residues():
    split = splitting_data(Polynomial.from_ints(Z4, [1, 1]))
    fake = SplittingData(split.f, split.extension, split.embedding, (split.roots[0], split.roots[0]))
    with pytest.raises(PreconditionError):
        vandermonde(fake)


def test_symbolic_inverse_matches_elimination():
    Z9 = construct_ring(3, 2, 1)
    cases = [
        splitting_data(F_CYCLIC),
        splitting_data(Polynomial.from_ints(Z9, [8, 0, 1])),
        splitting_data(Polynomial.from_ints(Z9, [3, 5, 0, 1])),
        splitting_data(Polynomial.from_ints(Z4, [3, 0, 0, 0, 0, 1])),
    ]
    for split in cases:
        assert vandermonde_inverse_symbolic(split) == vandermonde(split).V_inv


def test_ms_examples():
    split = splitting_data(F_CYCLIC)
    amb = AmbientSpace(Z4, F_CYCLIC)
    assert ms_transform(amb.one, split).serialize() == [[1, 0], [1, 0], [1, 0]]
    assert ms_transform(amb.x, split).serialize() == [[1, 0], [0, 1], [3, 3]]
    assert ms_transform(amb.element([3, 3, 3]), split).serialize() == [[1, 0], [0, 0], [0, 0]]


def test_ms_inverse_examples():
    split = splitting_data(F_CYCLIC)
    amb = AmbientSpace(Z4, F_CYCLIC)
    ext = split.extension
    spec = Spectrum(split, (ext.one, ext.zero, ext.zero))
    assert ms_inverse(spec).serialize() == [3, 3, 3]
    ones = Spectrum(split, (ext.one, ext.one, ext.one))
    assert ms_inverse(ones) == amb.one


def test_ms_roundtrip_exhaustive():
    split = splitting_data(F_CYCLIC)
    amb = AmbientSpace(Z4, F_CYCLIC)
    for g in amb.elements():
        assert ms_inverse(ms_transform(g, split)) == g


def test_ms_rejects_non_image():
    split = splitting_data(F_CYCLIC)
    ext = split.extension
    with pytest.raises(NotAnImageError):
        ms_inverse(Spectrum(split, (ext.zero, ext.one, ext.zero)))


def test_ms_is_ring_homomorphism_exhaustive():
    split = splitting_data(F_CYCLIC)
    amb = AmbientSpace(Z4, F_CYCLIC)
    elems = list(amb.elements())
    spectra = {g: ms_transform(g, split) for g in elems}
    rng = random.Random(0)
    for _ in range(400):
        a, b = rng.choice(elems), rng.choice(elems)
        assert spectra[a * b].values == spectra[a].star(spectra[b]).values
        assert spectra.get(a + b, ms_transform(a + b, split)).values == (spectra[a] + spectra[b]).values


def test_ms_injective_exhaustive_4096():
    GR = construct_ring(2, 2, 2)
    f = Polynomial.from_ints(GR, [[3, 0], [0, 0], [0, 0], [1, 0]])
    split = splitting_data(f)
    amb = AmbientSpace(GR, f)
    seen = set()
    for g in amb.elements():
        key = tuple(v.coeffs for v in ms_transform(g, split).values)
        assert key not in seen
        seen.add(key)
    assert len(seen) == 4096


def test_idempotent_spectra_partition():
    for ring, coeffs in [(Z4, [3, 0, 0, 1]), (construct_ring(3, 2, 1), [8, 0, 1])]:
        f = Polynomial.from_ints(ring, coeffs)
        amb = AmbientSpace(ring, f)
        split = amb.splitting()
        idem = amb.idempotents()
        supports = []
        for e in idem.idempotents:
            vals = ms_transform(e, split).values
            assert all(v.is_zero() or v == split.extension.one for v in vals)
            supports.append({i for i, v in enumerate(vals) if not v.is_zero()})
        union = set().union(*supports)
        assert union == set(range(f.degree))
        assert sum(len(s) for s in supports) == f.degree


def test_diagonalization_exact():
    split = splitting_data(F_CYCLIC)
    amb = AmbientSpace(Z4, F_CYCLIC)
    pair = vandermonde(split)
    for g in amb.elements():
        M = regular_representation(g).map_entries(split.embedding, split.extension)
        D = pair.V_inv * M * pair.V
        spec = ms_transform(g, split)
        for i in range(3):
            for j in range(3):
                if i == j:
                    assert D[i, j] == spec.values[i]
                else:
                    assert D[i, j].is_zero()


def test_ms_specializes_to_dft():
    # f = x^4 - 1 over Z5: roots are the powers of xi = 2, so the transform
    # acts as the DFT matrix after matching the root order
    Z5 = construct_ring(5, 1, 1)
    f = Polynomial.from_ints(Z5, [4, 0, 0, 0, 1])
    split = splitting_data(f)
    amb = AmbientSpace(Z5, f)
    assert dft_invertible(Z5.element(2), 4).invertible
    xi = Z5.element(2)
    dft_rows = [[xi ** (i * j) for j in range(4)] for i in range(4)]
    M_xi = RingMatrix(Z5, dft_rows)
    # column permutation matching root order to (xi^0, xi^1, xi^2, xi^3)
    root_of = {tuple(a.coeffs): idx for idx, a in enumerate(split.roots)}
    perm = [root_of[tuple((xi**j).coeffs)] for j in range(4)]
    rng = random.Random(1)
    for _ in range(50):
        g = amb.element([rng.randrange(5) for _ in range(4)])
        spec = ms_transform(g, split)
        dft = row_vector_times(list(g.coeffs), M_xi)
        assert all(spec.values[perm[j]] == dft[j] for j in range(4))


def test_ms_requires_matching_modulus():
    split = splitting_data(F_CYCLIC)
    other = AmbientSpace(Z4, Polynomial.from_ints(Z4, [3, 3, 2, 1]))
    with pytest.raises(PreconditionError):
        ms_transform(other.one, split)
