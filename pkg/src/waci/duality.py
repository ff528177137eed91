"""Poincare duality for artinian graded algebras."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .linalg import det
from .poly import Monomial, Polynomial
from .quotient import QuotientAlgebra, is_waci


class NotPDAError(ValueError):
    pass


class FormalDimensionError(AssertionError):
    """Top degree disagrees with sum(|f_i| - w_i): the relations are not regular."""


@dataclass(frozen=True)
class Orientation:
    """omega = scale * [top monomial]."""

    algebra: QuotientAlgebra
    monomial: Monomial
    top_degree: int
    scale: Fraction = Fraction(1)

    @property
    def omega(self) -> Polynomial:
        return Polynomial.monomial(self.algebra.ring, self.monomial, self.scale)

    def evaluate(self, x: Polynomial) -> Fraction:
        """<x, omega>: the coefficient of the top-degree part of x against omega."""
        return self.algebra.nf(x).coefficient(self.monomial) / self.scale

    def scaled(self, c) -> "Orientation":
        return Orientation(self.algebra, self.monomial, self.top_degree, self.scale * Fraction(c))


@dataclass(frozen=True)
class GramForm:
    degrees: Tuple[int, int]
    matrix: Tuple[Tuple[Fraction, ...], ...]
    basis: Tuple[Monomial, ...] = ()

    @property
    def size(self) -> int:
        return len(self.matrix)

    def is_symmetric(self) -> bool:
        m = self.matrix
        return all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(i))

    def rows(self):
        return [list(r) for r in self.matrix]


def formal_dimension(A: QuotientAlgebra) -> int:
    m = A.top_degree
    p = A.presentation
    if is_waci(p, A):
        expected = sum(p.relation_degrees) - sum(p.ring.weights)
        if m != expected:
            raise FormalDimensionError(f"top degree {m} != sum(|f_i| - w_i) = {expected}")
    return m


def pairing_matrix(A: QuotientAlgebra, i: int, omega: Orientation):
    """Matrix of <a*b, omega> for a in basis(i), b in basis(m - i)."""
    m = omega.top_degree
    left = A.basis_elements(i)
    right = A.basis_elements(m - i)
    return [[omega.evaluate(a * b) for b in right] for a in left]


def is_pda(A: QuotientAlgebra) -> bool:
    if not A.artinian:
        return False
    m = A.top_degree
    top = A.basis(m)
    if len(top) != 1 or A.dim(0) != 1:
        return False
    omega = Orientation(A, top[0], m)
    for i in range(0, m // 2 + 1):
        if A.dim(i) != A.dim(m - i):
            return False
        if A.dim(i) and det(pairing_matrix(A, i, omega)) == 0:
            return False
    return True


def orientation(A: QuotientAlgebra) -> Orientation:
    """Canonical orientation: the unique top standard monomial, coefficient +1."""
    if not is_pda(A):
        raise NotPDAError(f"{A.presentation} is not a Poincare duality algebra")
    m = A.top_degree
    return Orientation(A, A.basis(m)[0], m)


def middle_form(A: QuotientAlgebra, omega: Optional[Orientation] = None) -> GramForm:
    if omega is None:
        omega = orientation(A)
    m = omega.top_degree
    if m % 4:
        raise ValueError(f"formal dimension {m} is not a multiple of 4")
    k2 = m // 2
    mat = pairing_matrix(A, k2, omega)
    return GramForm((k2, k2), tuple(tuple(r) for r in mat), A.basis(k2))
