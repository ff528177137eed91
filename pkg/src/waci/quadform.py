"""Exact rational quadratic forms: diagonalisation, signature, residues and
the "sum of signed squares" (integrality) test.

A non-degenerate rational form is congruent to a diagonal form with +-1
entries iff its Witt class comes from W(Z).  After diagonalising to
square-free integer entries this is decided prime by prime:

* odd p: the residue form <d/p mod p : p | d> must be Witt-trivial over F_p,
  i.e. have even rank r and (-1)^(r/2) * prod(entries) a square mod p;
* p = 2: the residue lives in W(F_2) = Z/2 and is the parity of the number
  of even entries.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import isqrt, lcm
from typing import List, Optional, Sequence, Tuple, Union

from sympy import factorint

from .duality import GramForm
from .linalg import Matrix, det, identity, matmul, nullspace, transpose


class DegenerateFormError(ValueError):
    pass


FormLike = Union[GramForm, Sequence[Sequence]]


def _matrix(G: FormLike) -> Matrix:
    rows = G.rows() if isinstance(G, GramForm) else G
    m = [[Fraction(x) for x in row] for row in rows]
    if any(m[i][j] != m[j][i] for i in range(len(m)) for j in range(i)):
        raise ValueError("form is not symmetric")
    return m


def _gram(M: Matrix, P: Matrix) -> Matrix:
    return matmul(matmul(transpose(P), M), P)


def squarefree_decomposition(q: Fraction) -> Tuple[int, Fraction]:
    """Write q = s * r^2 with s a square-free integer and r > 0 rational."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("zero has no square-free part")
    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    s, root = 1, 1
    for prime, e in factorint(abs(n)).items():
        if e % 2:
            s *= prime
        root *= prime ** (e // 2)
    # q = n / den^2 = sign * s * root^2 / den^2
    return sign * s, Fraction(root, q.denominator)


def _symmetric_diagonalize(M: Matrix) -> Tuple[List[Fraction], Matrix]:
    """Return (d, P) with P^T M P = diag(d); zero entries allowed."""
    n = len(M)
    P = identity(n)
    G = [row[:] for row in M]
    d = []
    done = []
    remaining = list(range(n))

    def col(j):
        return [P[i][j] for i in range(n)]

    def set_col(j, v):
        for i in range(n):
            P[i][j] = v[i]

    while remaining:
        G = _gram(M, P)
        piv = next((i for i in remaining if G[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in remaining for j in remaining if i < j and G[i][j]), None)
            if pair is None:
                break  # what is left is totally degenerate
            i, j = pair
            t = 1 / (2 * G[i][j])
            set_col(i, [a + t * b for a, b in zip(col(i), col(j))])
            G = _gram(M, P)
            piv = i
        vp = col(piv)
        for j in remaining:
            if j != piv and G[piv][j]:
                f = G[piv][j] / G[piv][piv]
                set_col(j, [a - f * b for a, b in zip(col(j), vp)])
        remaining.remove(piv)
        done.append(piv)
    G = _gram(M, P)
    order = done + remaining
    Q = [[P[i][j] for j in order] for i in range(n)]
    return [G[j][j] for j in order], Q


@dataclass(frozen=True)
class DiagonalForm:
    entries: Tuple[int, ...]
    transform: Tuple[Tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.entries)


def diagonalize(G: FormLike) -> DiagonalForm:
    """P^T G P = diag(entries) with square-free integer entries; P is kept."""
    M = _matrix(G)
    d, P = _symmetric_diagonalize(M)
    if any(x == 0 for x in d):
        raise DegenerateFormError("form is degenerate")
    entries = []
    for j, x in enumerate(d):
        s, r = squarefree_decomposition(x)
        entries.append(s)
        for i in range(len(P)):
            P[i][j] /= r
    return DiagonalForm(tuple(entries), tuple(tuple(r) for r in P))


def signature(G: FormLike) -> int:
    d, _ = _symmetric_diagonalize(_matrix(G))
    return sum(1 for x in d if x > 0) - sum(1 for x in d if x < 0)


@dataclass(frozen=True)
class ResidueForm:
    prime: int
    entries: Tuple[int, ...]


def residue(D: DiagonalForm, p: int) -> ResidueForm:
    return ResidueForm(p, tuple((e // p) % p for e in D.entries if e % p == 0))


def _is_square_mod(a: int, p: int) -> bool:
    a %= p
    return a == 0 or pow(a, (p - 1) // 2, p) == 1


def witt_trivial(R: ResidueForm) -> bool:
    r = len(R.entries)
    if R.prime == 2:
        return r % 2 == 0
    if r % 2:
        return False
    prod_ = (-1) ** (r // 2)
    for e in R.entries:
        prod_ *= e
    return _is_square_mod(prod_, R.prime)


def relevant_primes(D: DiagonalForm) -> List[int]:
    primes = set()
    for e in D.entries:
        primes.update(factorint(abs(e)))
    return sorted(primes)


def residues_vanish(D: DiagonalForm) -> bool:
    return all(witt_trivial(residue(D, p)) for p in relevant_primes(D))


# -- constructive certificate ------------------------------------------------

def _find_unit_vector(M: Matrix, basis: Matrix, bound: int) -> Optional[List[Fraction]]:
    """Search small integer combinations c of ``basis`` with q(c) = +-t^2, t != 0."""
    k = len(basis)
    n = len(M)
    G = _gram(M, transpose(basis))
    for support in range(1, min(k, 3) + 1):
        for idx in combinations(range(k), support):
            for coeffs in product(range(1, bound + 1), *([range(-bound, bound + 1)] * (support - 1))):
                if 0 in coeffs:
                    continue
                val = sum(G[a][b] * coeffs[ia] * coeffs[ib]
                          for ia, a in enumerate(idx) for ib, b in enumerate(idx))
                if val == 0:
                    continue
                num, den = abs(val).numerator, abs(val).denominator
                rn, rd = isqrt(num), isqrt(den)
                if rn * rn == num and rd * rd == den:
                    t = Fraction(rn, rd)
                    v = [sum(coeffs[ia] * basis[a][i] for ia, a in enumerate(idx)) / t
                         for i in range(n)]
                    return v
    return None


def signed_squares_certificate(G: FormLike, bound: int = 24) -> Optional[Matrix]:
    """Matrix P (columns = new basis) with P^T G P diagonal with +-1 entries,
    found by peeling off vectors of norm +-1 and recursing on orthogonal
    complements; None if the bounded search fails."""
    M = _matrix(G)
    n = len(M)
    if det(M) == 0:
        raise DegenerateFormError("form is degenerate")
    d, P = _symmetric_diagonalize(M)
    basis = transpose(P)  # rows = current orthogonal basis of the working space
    found: List[List[Fraction]] = []
    while basis:
        v = _find_unit_vector(M, basis, bound)
        if v is None:
            return None
        found.append(v)
        Mv = [sum(M[i][j] * v[j] for j in range(n)) for i in range(n)]
        # complement of v inside span(basis): coefficients c with sum c_a (b_a . Mv) = 0
        pair = [[sum(b[i] * Mv[i] for i in range(n)) for b in basis]]
        coeff_basis = nullspace(pair, len(basis))
        basis = [[sum(c[a] * basis[a][i] for a in range(len(basis))) for i in range(n)]
                 for c in coeff_basis]
        if basis:
            d, Pc = _symmetric_diagonalize(_gram(M, transpose(basis)))
            basis = [[sum(Pc[a][j] * basis[a][i] for a in range(len(basis))) for i in range(n)]
                     for j in range(len(basis))]
    return transpose(found)


@dataclass(frozen=True)
class IntegralityResult:
    integral: bool
    entries: Tuple[int, ...]
    primes: Tuple[int, ...]
    certificate: Optional[Tuple[Tuple[Fraction, ...], ...]] = None


def integrality(G: FormLike, certify: bool = True, bound: int = 24) -> IntegralityResult:
    D = diagonalize(G)
    ok = residues_vanish(D)
    cert = None
    if ok and certify:
        P = signed_squares_certificate(G, bound)
        if P is not None:
            cert = tuple(tuple(r) for r in P)
    return IntegralityResult(ok, D.entries, tuple(relevant_primes(D)), cert)


def is_sum_of_signed_squares(G: FormLike) -> bool:
    return integrality(G, certify=False).integral


def check_certificate(G: FormLike, P: Sequence[Sequence]) -> bool:
    M = _matrix(G)
    R = _gram(M, [list(r) for r in P])
    n = len(R)
    return all(R[i][j] == 0 for i in range(n) for j in range(n) if i != j) and all(
        abs(R[i][i]) == 1 for i in range(n)
    ) and det([list(r) for r in P]) != 0


# -- brute-force oracle -------------------------------------------------------

def brute_force_signed_squares(G: FormLike, bound: int = 24, tries: int = 40) -> bool:
    """Independent check: look for v = n/D (|n_i| <= bound, 1 <= D <= bound)
    with q(v) = +-1, split it off, recurse on the orthogonal complement.
    Works on the raw Gram matrix, never on a diagonalisation.  The only
    shortcuts are exact: det must be +-1 up to a square, and a rank one
    form <a> needs |a| to be a rational square."""
    import numpy as np

    M = _matrix(G)
    if det(M) == 0:
        raise DegenerateFormError("form is degenerate")
    squares = np.array([D * D for D in range(1, bound + 1)], dtype=np.int64)
    rng = np.arange(-bound, bound + 1, dtype=np.int64)

    def is_rational_square(q: Fraction) -> bool:
        q = abs(q)
        return isqrt(q.numerator) ** 2 == q.numerator and isqrt(q.denominator) ** 2 == q.denominator

    def rec(M: Matrix) -> bool:
        n = len(M)
        if n == 1:
            return is_rational_square(M[0][0])
        den = 1
        for row in M:
            for x in row:
                den = lcm(den, x.denominator)
        Mi = np.array([[int(x * den) for x in row] for row in M], dtype=np.int64)
        grids = np.meshgrid(*([rng] * n), indexing="ij")
        V = np.stack([g.ravel() for g in grids], axis=1)
        vals = np.einsum("ij,jk,ik->i", V, Mi, V)  # den * q(n)
        ok = (vals != 0) & (vals % den == 0)
        ok &= np.isin(np.abs(vals // den), squares)
        cand = np.nonzero(ok)[0]
        cand = cand[np.argsort(np.abs(V[cand]).sum(axis=1), kind="stable")]
        for idx in cand[:tries]:
            nvec = [int(x) for x in V[idx]]
            Mv = [sum(M[i][j] * nvec[j] for j in range(n)) for i in range(n)]
            comp = nullspace([Mv], n)
            MC = [[sum(M[i][j] * c[j] for j in range(n)) for i in range(n)] for c in comp]
            sub = [[sum(a[i] * mc[i] for i in range(n)) for mc in MC] for a in comp]
            if rec(sub):
                return True
        return False

    # congruence multiplies det by a square, so det must be +-1 up to squares
    if not is_rational_square(det(M)):
        return False
    return rec(M)
