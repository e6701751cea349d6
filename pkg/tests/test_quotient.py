"""Quotient-ring arithmetic, companion matrices, regular representation."""

import itertools
import random

import pytest

from polycodes.errors import PreconditionError
from polycodes.linalg import RingMatrix, row_vector_times
from polycodes.poly import Polynomial
from polycodes.quotient import (
    AmbientSpace,
    commutes_with_companion,
    companion_matrix,
    regular_representation,
    row_product,
    trace_map,
)
from polycodes.rings import construct_ring

Z4 = construct_ring(2, 2, 1)
F_CYCLIC = Polynomial.from_ints(Z4, [3, 0, 0, 1])  # x^3 - 1
F_PAPER = Polynomial.from_ints(Z4, [3, 3, 2, 1])  # x^3 - 2x^2 - x - 1


def test_quot_mul_examples():
    amb = AmbientSpace(Z4, F_CYCLIC)
    x = amb.x
    assert x * (x * x) == amb.one
    amb2 = AmbientSpace(Z4, F_PAPER)
    w = amb2.element([1, 0, 1])
    assert (w * w).serialize() == [3, 3, 3]
    g = amb2.element([2, 1, 3])
    assert g * amb2.one == g


def test_ambient_mismatch():
    a = AmbientSpace(Z4, F_CYCLIC).one
    b = AmbientSpace(Z4, F_PAPER).one
    with pytest.raises(PreconditionError):
        a * b


def test_companion_examples():
    assert companion_matrix(F_CYCLIC).serialize() == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    assert companion_matrix(F_PAPER).serialize() == [[0, 1, 0], [0, 0, 1], [1, 1, 2]]
    f1 = Polynomial.from_ints(Z4, [2, 1])  # x - 2
    assert companion_matrix(f1).serialize() == [[2]]
    with pytest.raises(PreconditionError):
        companion_matrix(Polynomial.from_ints(Z4, [1, 2]))


def test_regular_representation_examples():
    amb = AmbientSpace(Z4, F_CYCLIC)
    assert regular_representation(amb.x) == companion_matrix(F_CYCLIC)
    e1 = amb.element([3, 3, 3])
    assert regular_representation(e1).serialize() == [[3, 3, 3]] * 3
    assert regular_representation(amb.one) == RingMatrix.identity(Z4, 3)


def test_regular_representation_is_ring_homomorphism_exhaustive():
    amb = AmbientSpace(Z4, F_CYCLIC)
    elems = list(amb.elements())
    reps = {g: regular_representation(g) for g in elems}
    rng = random.Random(0)
    pairs = [(rng.choice(elems), rng.choice(elems)) for _ in range(300)]
    for a, b in pairs:
        assert reps.get(a * b) == reps[a] * reps[b]
        assert regular_representation(a + b) == reps[a] + reps[b]


def test_regular_image_is_companion_polynomial():
    amb = AmbientSpace(Z4, F_PAPER)
    E = companion_matrix(F_PAPER)
    rng = random.Random(5)
    for _ in range(40):
        g = amb.element([rng.randrange(4) for _ in range(3)])
        expected = RingMatrix.zero(Z4, 3, 3)
        P = RingMatrix.identity(Z4, 3)
        for c in g.coeffs:
            expected = expected + P * c
            P = P * E
        assert regular_representation(g) == expected


def test_row_product_examples():
    e = [Z4.element(0), Z4.element(1), Z4.element(0)]
    assert [c.serialize() for c in row_product(e, e, F_CYCLIC)] == [0, 0, 1]
    v = [Z4.element(1), Z4.element(0), Z4.element(1)]
    assert [c.serialize() for c in row_product(v, v, F_PAPER)] == [3, 3, 3]
    one = [Z4.element(1), Z4.element(0), Z4.element(0)]
    a = [Z4.element(2), Z4.element(3), Z4.element(1)]
    assert row_product(a, one, F_PAPER) == a


def test_row_product_matches_quotient_multiplication():
    amb = AmbientSpace(Z4, F_PAPER)
    rng = random.Random(9)
    for _ in range(50):
        g = amb.element([rng.randrange(4) for _ in range(3)])
        h = amb.element([rng.randrange(4) for _ in range(3)])
        assert row_product(list(g.coeffs), list(h.coeffs), F_PAPER) == list((g * h).coeffs)


def test_commutes_with_companion_examples():
    amb = AmbientSpace(Z4, F_CYCLIC)
    rng = random.Random(2)
    for _ in range(20):
        g = amb.element([rng.randrange(4) for _ in range(3)])
        assert commutes_with_companion(regular_representation(g), F_CYCLIC)
    D = RingMatrix.from_ints(Z4, [[1, 0, 0], [0, 2, 0], [0, 0, 3]])
    assert not commutes_with_companion(D, F_CYCLIC)
    assert commutes_with_companion(RingMatrix.identity(Z4, 3), F_CYCLIC)


def test_centralizer_equals_companion_span_exhaustive_2x2():
    f = Polynomial.from_ints(Z4, [3, 0, 1])  # x^2 - 1
    E = companion_matrix(f)
    span = set()
    for a in range(4):
        for b in range(4):
            span.add(RingMatrix.identity(Z4, 2) * Z4.element(a) + E * Z4.element(b))
    for entries in itertools.product(range(4), repeat=4):
        M = RingMatrix.from_ints(Z4, [entries[:2], entries[2:]])
        assert commutes_with_companion(M, f) == (M in span)


def test_centralizer_equals_companion_span_exhaustive_3x3():
    # all 4^9 matrices over Z4 against f = x^3 - 1; raw integer arithmetic
    # keeps the sweep fast, with early exit on the commutator
    E = ((0, 1, 0), (0, 0, 1), (1, 0, 0))
    span = set()
    for a in range(4):
        for b in range(4):
            for c in range(4):
                rows = []
                for i in range(3):
                    base = [0, 0, 0]
                    base[i] = a
                    base[(i + 1) % 3] = (base[(i + 1) % 3] + b) % 4
                    base[(i + 2) % 3] = (base[(i + 2) % 3] + c) % 4
                    rows.append(tuple(base))
                span.add(tuple(rows))
    count_commuting = 0
    for key in range(4**9):
        t = key
        flat = []
        for _ in range(9):
            flat.append(t % 4)
            t //= 4
        M = (tuple(flat[0:3]), tuple(flat[3:6]), tuple(flat[6:9]))
        commutes = True
        for i in range(3):
            for j in range(3):
                me = sum(M[i][k] * E[k][j] for k in range(3)) % 4
                em = sum(E[i][k] * M[k][j] for k in range(3)) % 4
                if me != em:
                    commutes = False
                    break
            if not commutes:
                break
        assert commutes == (M in span)
        count_commuting += commutes
    assert count_commuting == 64  # |span{I, E, E^2}| with coefficients in Z4


def test_trace_map_examples():
    amb = AmbientSpace(Z4, F_CYCLIC)
    assert trace_map(amb.one) == Z4.element(3)
    assert trace_map(amb.element([3, 3, 3])) == Z4.one
    assert trace_map(amb.zero).is_zero()


def test_trace_map_equals_matrix_trace():
    amb = AmbientSpace(Z4, F_PAPER)
    rng = random.Random(4)
    for _ in range(50):
        g = amb.element([rng.randrange(4) for _ in range(3)])
        assert trace_map(g) == regular_representation(g).trace()


def test_shift_closure_of_regular_rows():
    amb = AmbientSpace(Z4, F_PAPER)
    E = amb.companion()
    g = amb.element([1, 2, 0])
    M = regular_representation(g)
    rows = [list(r) for r in M.rows]
    # row i times E equals row i+1
    for i in range(2):
        assert row_vector_times(rows[i], E) == rows[i + 1]
