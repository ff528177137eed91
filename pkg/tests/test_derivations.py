import pytest

from waci.derivations import (
    AlgebraMismatchError,
    Derivation,
    bracket,
    derivation_space,
    euler_derivation,
    negative_degrees,
    negative_derivations_vanish,
    oracle_agrees,
    tensor_presentation,
)
from waci.families import SplitParams, eisenbud_levine, flag_presentation, split_family, truncated
from waci.poly import PresentationError
from waci.quotient import QuotientAlgebra

X3 = truncated(3, 2)
Y3 = truncated(3, 2, "y")


def test_truncated_examples():
    A = QuotientAlgebra(X3)
    d0 = derivation_space(A, 0)
    assert d0.dim == 1
    assert str(d0.basis[0]) == "{x -> x}"
    assert derivation_space(A, -2).dim == 0
    assert negative_degrees(A) == [-2]


def test_el3_dimensions():
    A = QuotientAlgebra(eisenbud_levine(3))
    assert derivation_space(A, 0).dim == 1
    assert negative_derivations_vanish(A)
    assert negative_derivations_vanish(QuotientAlgebra(eisenbud_levine(4)))


def test_split_negative_vanish():
    A = QuotientAlgebra(split_family(SplitParams(2, 1, (2, 2), (2, 2))))
    assert negative_derivations_vanish(A)


def test_euler_examples():
    A = QuotientAlgebra(X3)
    assert str(euler_derivation(A)) == "{x -> 2*x}"
    B = QuotientAlgebra(eisenbud_levine(3))
    e = euler_derivation(B)
    assert str(e) == "{x1 -> 2*x1, x2 -> 2*x2, x3 -> 2*x3}"
    assert e.is_valid()
    assert derivation_space(B, 0).contains(e)


def test_euler_grading_eigenvalue():
    A = QuotientAlgebra(eisenbud_levine(3))
    e = euler_derivation(A)
    for d in A.degrees():
        for m in A.basis_elements(d):
            assert e(m) == m.scale(d)


def test_bracket_examples():
    A = QuotientAlgebra(eisenbud_levine(3))
    e = euler_derivation(A)
    for p in (2, 4):
        for theta in derivation_space(A, p).basis:
            assert bracket(e, theta) == theta.scale(p)
            assert all(img.is_zero() for img in bracket(theta, theta).images)
    zero = bracket(e, e)
    assert all(img.is_zero() for img in zero.images)
    with pytest.raises(AlgebraMismatchError):
        bracket(e, euler_derivation(QuotientAlgebra(eisenbud_levine(3))))


def test_bracket_is_a_derivation():
    A = QuotientAlgebra(eisenbud_levine(3))
    b2 = derivation_space(A, 2).basis
    for t1 in b2:
        for t2 in b2:
            assert bracket(t1, t2).is_valid()


def test_leibniz_on_standard_monomials():
    A = QuotientAlgebra(eisenbud_levine(3))
    for p in (0, 2, 4):
        for theta in derivation_space(A, p).basis:
            mons = [m for d in A.degrees() for m in A.basis_elements(d)]
            for a in mons:
                for b in mons:
                    assert theta(a * b) == A.nf(theta(a) * b + a * theta(b))


def test_tensor_examples():
    T = tensor_presentation(X3, Y3)
    assert [str(f) for f in T.relations] == ["x^3", "y^3"]
    A, B, AB = (QuotientAlgebra(p) for p in (X3, Y3, T))
    hA, hB = A.hilbert(), B.hilbert()
    prod_ = [0] * (len(hA) + len(hB) - 1)
    for i, a in enumerate(hA):
        for j, b in enumerate(hB):
            prod_[i + j] += a * b
    assert list(AB.hilbert()) == prod_
    assert derivation_space(AB, 0).dim == 2
    assert negative_derivations_vanish(AB)


def test_tensor_renames_clashes():
    T = tensor_presentation(X3, X3)
    assert T.ring.variables == ("x", "x_2")
    with pytest.raises(PresentationError):
        tensor_presentation(T, X3, suffix="_2")


@pytest.mark.parametrize("p", [X3, eisenbud_levine(3), flag_presentation(2),
                               split_family(SplitParams(2, 1, (2, 2), (2, 2)))],
                         ids=["x3", "el3", "flag2", "split21"])
def test_oracle_agreement(p):
    A = QuotientAlgebra(p)
    for deg in range(-max(p.ring.weights), 5, 2):
        assert oracle_agrees(A, deg)


def test_invalid_images_are_detected():
    A = QuotientAlgebra(X3)
    ring = A.ring
    bogus = Derivation(A, -2, (ring.one(),))
    assert not bogus.is_valid()
