from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from conftest import canonical_forms, invertible_matrices, symmetric_matrices
from waci.duality import middle_form
from waci.families import SplitParams, eisenbud_levine, split_family
from waci.linalg import det, matmul, transpose
from waci.quadform import (
    DegenerateFormError,
    ResidueForm,
    brute_force_signed_squares,
    check_certificate,
    diagonalize,
    integrality,
    is_sum_of_signed_squares,
    residue,
    signature,
    signed_squares_certificate,
    squarefree_decomposition,
    witt_trivial,
)
from waci.quotient import QuotientAlgebra

HYP = [[0, 1], [1, 0]]
I4 = [[int(i == j) for j in range(4)] for i in range(4)]


def congruent(G, P):
    return matmul(matmul(transpose(P), [[Fraction(x) for x in r] for r in G]), P)


def test_diagonalize_examples():
    assert sorted(diagonalize(HYP).entries) == [-1, 1]
    assert diagonalize(I4).entries == (1, 1, 1, 1)
    assert diagonalize([[2]]).entries == (2,)
    assert diagonalize([[Fraction(8, 9)]]).entries == (2,)
    with pytest.raises(DegenerateFormError):
        diagonalize([[1, 1], [1, 1]])


def test_squarefree_decomposition():
    assert squarefree_decomposition(Fraction(8, 9)) == (2, Fraction(2, 3))
    assert squarefree_decomposition(Fraction(-12)) == (-3, Fraction(2))


def test_signature_examples():
    assert signature(middle_form(QuotientAlgebra(eisenbud_levine(3)))) == 4
    assert signature(middle_form(QuotientAlgebra(split_family(SplitParams(2, 1, (2, 2), (2, 2)))))) == 0
    assert signature(HYP) == 0
    assert signature([[1, 0], [0, 0]]) == 1


def test_residue_examples():
    assert residue(diagonalize([[2]]), 2) == ResidueForm(2, (1,))
    assert not witt_trivial(residue(diagonalize([[2]]), 2))
    for p in (2, 3, 5):
        assert residue(diagonalize([[1, 0], [0, -1]]), p).entries == ()
    r = residue(diagonalize([[6, 0], [0, -6]]), 3)
    assert r == ResidueForm(3, (2, 1)) and witt_trivial(r)


def test_witt_triviality_over_fp():
    assert witt_trivial(ResidueForm(5, (1, 1)))      # -1 is a square mod 5
    assert not witt_trivial(ResidueForm(3, (1, 1)))  # -1 is not a square mod 3
    assert witt_trivial(ResidueForm(3, (1, 2)))
    assert not witt_trivial(ResidueForm(7, (3,)))
    assert witt_trivial(ResidueForm(2, (1, 1)))


def test_integrality_examples():
    assert is_sum_of_signed_squares(middle_form(QuotientAlgebra(eisenbud_levine(3))))
    assert not is_sum_of_signed_squares([[2]])
    assert is_sum_of_signed_squares([[2, 0], [0, 2]])
    P = signed_squares_certificate([[2, 0], [0, 2]])
    assert P is not None and check_certificate([[2, 0], [0, 2]], P)
    assert not is_sum_of_signed_squares([[3, 0], [0, 3]])
    assert is_sum_of_signed_squares([[3, 0], [0, -3]])
    res = integrality([[2, 1], [1, 2]])
    assert res.integral == brute_force_signed_squares([[2, 1], [1, 2]])


@pytest.mark.parametrize("a", [1, 2, 3, 5, 6, 7, 30])
def test_hyperbolic_always_integral(a):
    G = [[a, 0], [0, -a]]
    r = integrality(G)
    assert r.integral and r.certificate is not None and check_certificate(G, r.certificate)


@settings(max_examples=60, deadline=None)
@given(symmetric_matrices(), st.data())
def test_congruence_invariance(G, data):
    assume(det(G) != 0)
    P = data.draw(invertible_matrices(len(G)))
    H = congruent(G, P)
    assert signature(H) == signature(G)
    assert is_sum_of_signed_squares(H) == is_sum_of_signed_squares(G)


@settings(max_examples=80, deadline=None)
@given(symmetric_matrices())
def test_signature_parity_and_reassembly(G):
    D = None
    if det(G) != 0:
        D = diagonalize(G)
        P = [list(r) for r in D.transform]
        R = congruent(G, P)
        n = len(G)
        assert all(R[i][j] == (D.entries[i] if i == j else 0) for i in range(n) for j in range(n))
        assert signature(G) % 2 == D.rank % 2
    assert abs(signature(G)) <= len(G)


@settings(max_examples=40, deadline=None)
@given(symmetric_matrices(max_n=4, lo=-3, hi=3))
def test_certificates_are_valid(G):
    assume(det(G) != 0)
    r = integrality(G)
    if r.certificate is not None:
        assert r.integral and check_certificate(G, r.certificate)


def test_oracle_agreement_small():
    for n in (1, 2):
        for G in canonical_forms(n):
            assert is_sum_of_signed_squares(G) == brute_force_signed_squares(G), G
