"""Ideals, annihilators, the four dualities, decomposition, distance."""

import itertools

import pytest

from polycodes.codes import (
    all_ideals,
    annihilator,
    code_from_generators,
    code_sum,
    decompose,
    dual_code,
    duality_report,
    full_code,
    generator_matrix,
    min_distance,
    zero_code,
)
from polycodes.errors import EnumerationBudgetError, PreconditionError
from polycodes.linalg import howell_form, kernel, row_vector_times
from polycodes.poly import Polynomial
from polycodes.quotient import AmbientSpace, regular_representation, trace_map
from polycodes.rings import construct_ring
from polycodes.transform import ms_transform

Z4 = construct_ring(2, 2, 1)
Z9 = construct_ring(3, 2, 1)
F_CYCLIC = Polynomial.from_ints(Z4, [3, 0, 0, 1])
AMB = AmbientSpace(Z4, F_CYCLIC)
E1 = AMB.element([3, 3, 3])
E2 = AMB.element([2, 1, 1])


def test_code_from_generators_examples():
    C = code_from_generators(AMB, [E1])
    words = {tuple(c.serialize() for c in w.coeffs) for w in C.codewords()}
    assert words == {(a, a, a) for a in range(4)}
    assert C.size == 4
    assert full_code(AMB).size == 64
    assert zero_code(AMB).size == 1
    assert zero_code(AMB).serialize() == []


def test_code_canonical_equality():
    C1 = code_from_generators(AMB, [E1])
    C2 = code_from_generators(AMB, [E1 * 3, E1 * AMB.x])
    assert C1 == C2
    assert C1.serialize() == C2.serialize()


def test_annihilator_examples():
    C1 = code_from_generators(AMB, [E1])
    assert annihilator(C1) == code_from_generators(AMB, [E2])
    assert annihilator(full_code(AMB)) == zero_code(AMB)
    assert annihilator(zero_code(AMB)) == full_code(AMB)


def test_annihilator_brute_force():
    C1 = code_from_generators(AMB, [E1])
    brute = [h for h in AMB.elements() if all((h * g).is_zero() for g in C1.codewords())]
    A = annihilator(C1)
    assert {tuple(h.coeffs) for h in brute} == {tuple(w.coeffs) for w in A.codewords()}


def test_dual_examples():
    C1 = code_from_generators(AMB, [E1])
    C2 = code_from_generators(AMB, [E2])
    assert dual_code(C1, "trace") == C2
    assert dual_code(C1, "zero") == C2
    assert dual_code(C1, "star") == C2
    assert dual_code(zero_code(AMB), "trace") == full_code(AMB)
    assert dual_code(zero_code(AMB), "star") == full_code(AMB)


def test_dual_brute_force_trace_and_zero():
    C = code_from_generators(AMB, [E1 * 2])  # non-free ideal <2 e1>
    words = list(C.codewords())
    brute_tr = {
        tuple(h.coeffs)
        for h in AMB.elements()
        if all(trace_map(h * g).is_zero() for g in words)
    }
    brute_zero = {
        tuple(h.coeffs)
        for h in AMB.elements()
        if all((h * g).coeffs[0].is_zero() for g in words)
    }
    assert {tuple(w.coeffs) for w in dual_code(C, "trace").codewords()} == brute_tr
    assert {tuple(w.coeffs) for w in dual_code(C, "zero").codewords()} == brute_zero


def test_zero_form_needs_nonzero_constant_term():
    f = Polynomial.from_ints(Z4, [0, 1, 1])  # x^2 + x, residue squarefree
    amb = AmbientSpace(Z4, f)
    C = full_code(amb)
    with pytest.raises(PreconditionError):
        dual_code(C, "zero")
    rep = duality_report(C)
    assert rep.skipped == ("zero",)
    assert rep.all_equal


def test_unknown_form_rejected():
    with pytest.raises(PreconditionError):
        dual_code(full_code(AMB), "hermitian")


def test_duality_report_examples():
    rep = duality_report(code_from_generators(AMB, [E1]))
    assert rep.all_equal
    assert sorted(rep.duals) == ["annihilator", "star", "trace", "zero"]
    rep_full = duality_report(full_code(AMB))
    assert rep_full.all_equal and rep_full.duals["annihilator"] == zero_code(AMB)
    rep_nonfree = duality_report(code_from_generators(AMB, [E1 * 2]))
    assert rep_nonfree.all_equal


def test_duality_theorem_all_ideals_small():
    ideals = all_ideals(AMB)
    assert len(ideals) == 9
    for C in ideals:
        assert duality_report(C).all_equal


def test_trace_form_nondegenerate():
    # only g = 0 is trace-orthogonal to the whole ambient
    assert dual_code(full_code(AMB), "trace") == zero_code(AMB)
    amb2 = AmbientSpace(Z4, Polynomial.from_ints(Z4, [3, 3, 2, 1]))
    assert dual_code(full_code(amb2), "trace") == zero_code(amb2)


def test_dual_preservation_pairs_exhaustive():
    # <g1,g2>_tr = 0 iff the spectra are star-orthogonal, on all 64*64 pairs;
    # moreover the embedded trace equals the star sum exactly
    amb = AMB
    split = amb.splitting()
    elems = list(amb.elements())
    spectra = {g: ms_transform(g, split) for g in elems}
    ext = split.extension
    for a in elems:
        for b in elems:
            tr = trace_map(a * b)
            star = ext.zero
            for u, v in zip(spectra[a].values, spectra[b].values):
                star = star + u * v
            assert split.embedding(tr) == star
            assert tr.is_zero() == star.is_zero()


def test_invariant_subspace_characterizations():
    # component ideals: membership via e*c = c, rho-image = ker f_i(E_f)
    amb = AMB
    idem = amb.idempotents()
    E = amb.companion()
    for i, e in enumerate(idem.idempotents):
        C = code_from_generators(amb, [e])
        for c in amb.elements():
            assert C.contains(c) == (e * c == c)
        fi = idem.factorization.factors[i]
        fi_at_E = None
        from polycodes.linalg import RingMatrix

        acc = RingMatrix.zero(Z4, 3, 3)
        P = RingMatrix.identity(Z4, 3)
        for c in fi.padded(fi.degree + 1):
            acc = acc + P * c
            P = P * E
        fi_at_E = acc
        assert kernel(fi_at_E).serialize() == C.basis.serialize()
        # M(e_i) rows span the code and are E_f-invariant
        M = regular_representation(e)
        assert howell_form(M).serialize() == C.basis.serialize()
        for row in M.rows:
            assert C.basis.contains(row_vector_times(list(row), E))


def test_complement_duality_free_codes():
    amb = AMB
    idem = amb.idempotents()
    e1, e2 = idem.idempotents
    C = code_from_generators(amb, [e1])
    assert dual_code(C, "trace") == code_from_generators(amb, [e2])
    full = code_from_generators(amb, [e1, e2])
    assert dual_code(full, "trace") == zero_code(amb)


def test_decompose_examples():
    C1 = code_from_generators(AMB, [E1])
    d = decompose(C1)
    assert d.components == ((1, 0), (2, 2))
    assert d.free
    d_full = decompose(full_code(AMB))
    assert d_full.components == ((1, 0), (2, 0))
    d_two = decompose(code_from_generators(AMB, [AMB.element([2, 0, 0])]))
    assert d_two.components == ((1, 1), (2, 1))
    assert not d_two.free


def test_decompose_reassembles_every_ideal():
    for C in all_ideals(AMB):
        decompose(C)  # raises when reassembly fails


def test_generator_matrix_examples():
    C1 = code_from_generators(AMB, [E1])
    G = generator_matrix(C1)
    assert howell_form(G).serialize() == C1.basis.serialize()
    assert G.serialize() == [[1, 1, 1]]
    assert generator_matrix(zero_code(AMB)).serialize() == []
    assert generator_matrix(full_code(AMB)).serialize() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    # the regular representation of e1 spans the same row module
    assert howell_form(regular_representation(E1)).serialize() == C1.basis.serialize()


def test_min_distance_examples():
    assert min_distance(code_from_generators(AMB, [E1])).value == 3
    assert min_distance(code_from_generators(AMB, [E2])).value == 2
    z = min_distance(zero_code(AMB))
    assert z.value == 0 and z.empty


def test_min_distance_brute_force_oracle():
    for gens in ([E2], [E1 * 2], [AMB.x - AMB.one]):
        C = code_from_generators(AMB, gens)
        brute = min(w.weight() for w in C.codewords() if not w.is_zero())
        assert min_distance(C).value == brute


def test_min_distance_budget():
    with pytest.raises(EnumerationBudgetError):
        min_distance(full_code(AMB), budget=10)


def test_code_sum_and_ideal_lattice():
    C1 = code_from_generators(AMB, [E1])
    C2 = code_from_generators(AMB, [E2])
    assert code_sum(C1, C2) == full_code(AMB)
    assert code_sum(C1, zero_code(AMB)) == C1


def test_all_ideals_z9():
    amb = AmbientSpace(Z9, Polynomial.from_ints(Z9, [8, 0, 1]))
    ideals = all_ideals(amb)
    # Z9 x Z9 as a product of chain rings: 3 x 3 ideals
    assert len(ideals) == 9
    for C in ideals:
        assert duality_report(C).all_equal
