import itertools
from fractions import Fraction

import numpy as np
from hypothesis import strategies as st

from waci.linalg import rank
from waci.poly import Polynomial, WeightedRing, monomials_of_degree


def macaulay_dim(p, d):
    """dim (Q[x]/I)_d by plain linear algebra: monomials of degree d modulo
    the span of all m * f_j landing in degree d."""
    w = p.ring.weights
    mons = list(monomials_of_degree(w, d))
    if not mons:
        return 0
    index = {m: i for i, m in enumerate(mons)}
    rows = []
    for f in p.relations:
        e = d - f.weighted_degree()
        if e < 0:
            continue
        for m in monomials_of_degree(w, e):
            g = f.mul_monomial(m)
            row = [Fraction(0)] * len(mons)
            for t, c in g.terms.items():
                row[index[t]] = c
            rows.append(row)
    return len(mons) - (rank(rows, len(mons)) if rows else 0)


def canonical_forms(n, lo=-3, hi=3):
    """Non-degenerate symmetric n x n integer matrices with entries in [lo, hi],
    one per class under signed permutations (P^T G P with P a signed
    permutation matrix)."""
    idx = [(i, j) for i in range(n) for j in range(i, n)]
    vals = np.array(list(itertools.product(range(lo, hi + 1), repeat=len(idx))), dtype=np.int64)
    M = np.zeros((len(vals), n, n), dtype=np.int64)
    for k, (i, j) in enumerate(idx):
        M[:, i, j] = vals[:, k]
        M[:, j, i] = vals[:, k]
    det = np.rint(np.linalg.det(M.astype(float))).astype(np.int64)
    M = M[det != 0]
    base = hi - lo + 1
    keys = None
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            N = M[:, perm][:, :, perm] * np.outer(signs, signs)
            key = np.zeros(len(M), dtype=np.int64)
            for i, j in idx:
                key = key * base + (N[:, i, j] - lo)
            keys = key if keys is None else np.minimum(keys, key)
    _, first = np.unique(keys, return_index=True)
    return [M[i].tolist() for i in sorted(first)]


RING3 = WeightedRing(("x", "y", "z"), (2, 4, 2))

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polynomials(draw, ring=RING3, max_terms=4, max_exp=3):
    n = ring.nvars
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        m = tuple(draw(st.integers(0, max_exp)) for _ in range(n))
        terms[m] = draw(small_fractions)
    return Polynomial(ring, terms)


@st.composite
def symmetric_matrices(draw, max_n=6, lo=-4, hi=4):
    n = draw(st.integers(1, max_n))
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            M[i][j] = M[j][i] = draw(st.integers(lo, hi))
    return M


@st.composite
def invertible_matrices(draw, n):
    from waci.linalg import det

    while True:
        P = [[draw(small_fractions) for _ in range(n)] for _ in range(n)]
        if det(P) != 0:
            return P
