"""Groebner bases, normal forms and graded pieces of Q[x]/I.

Everything is homogeneous for the weighted grading, so S-pairs are treated
degree by degree and the graded pieces of the quotient are spanned by the
standard monomials of each weighted degree.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .poly import (
    Monomial,
    Polynomial,
    Presentation,
    RingMismatchError,
    mono_div,
    mono_divides,
    mono_lcm,
    monomials_of_degree,
    order_key,
    weighted_degree,
)


class NotArtinianError(ValueError):
    """The quotient is infinite-dimensional, so it cannot be a WACI."""


class NotCompleteIntersectionError(ValueError):
    pass


def _reduce(terms: Dict[Monomial, Fraction], basis, weights) -> Dict[Monomial, Fraction]:
    """Full reduction of a term dict by ``basis`` = [(lm, lc, terms)]."""
    p = dict(terms)
    rem: Dict[Monomial, Fraction] = {}
    while p:
        m = max(p, key=lambda t: order_key(t, weights))
        c = p[m]
        for lm, lc, g in basis:
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                f = c / lc
                for gm, gc in g.items():
                    k = tuple(a + b for a, b in zip(gm, q))
                    v = p.get(k, 0) - f * gc
                    if v:
                        p[k] = v
                    else:
                        p.pop(k, None)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


@dataclass(frozen=True)
class GroebnerBasis:
    presentation: Presentation
    basis: Tuple[Polynomial, ...]
    order: str = "weighted-grevlex"

    @property
    def leading_monomials(self) -> Tuple[Monomial, ...]:
        return tuple(g.leading_monomial() for g in self.basis)

    def _triples(self):
        return [(g.leading_monomial(), g.leading_coefficient(), g.terms) for g in self.basis]


def groebner(p: Presentation) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal of ``p`` (Buchberger, normal strategy)."""
    ring = p.ring
    w = ring.weights
    G: List[Tuple[Monomial, Fraction, Dict[Monomial, Fraction]]] = []

    def add(terms):
        lm = max(terms, key=lambda t: order_key(t, w))
        lc = terms[lm]
        g = {m: c / lc for m, c in terms.items()}
        G.append((lm, Fraction(1), g))

    # seed with inter-reduced generators, smallest degree first
    gens = sorted((f for f in p.relations if f), key=lambda f: order_key(f.leading_monomial(), w))
    pairs = []
    for f in gens:
        r = _reduce(f.terms, G, w)
        if r:
            add(r)
            new = len(G) - 1
            pairs.extend((i, new) for i in range(new))

    while pairs:
        pairs.sort(key=lambda ij: order_key(mono_lcm(G[ij[0]][0], G[ij[1]][0]), w))
        i, j = pairs.pop(0)
        lmi, _, gi = G[i]
        lmj, _, gj = G[j]
        lcm_ = mono_lcm(lmi, lmj)
        if all(a == 0 or b == 0 for a, b in zip(lmi, lmj)):
            continue  # coprime leading monomials
        qi, qj = mono_div(lcm_, lmi), mono_div(lcm_, lmj)
        s: Dict[Monomial, Fraction] = {}
        for m, c in gi.items():
            k = tuple(a + b for a, b in zip(m, qi))
            s[k] = s.get(k, 0) + c
        for m, c in gj.items():
            k = tuple(a + b for a, b in zip(m, qj))
            s[k] = s.get(k, 0) - c
        s = {m: c for m, c in s.items() if c}
        r = _reduce(s, G, w)
        if r:
            add(r)
            new = len(G) - 1
            pairs.extend((k, new) for k in range(new))

    # minimalize then inter-reduce
    lms = [g[0] for g in G]
    keep = []
    for idx, lm in enumerate(lms):
        dominated = any(
            mono_divides(lms[o], lm) and (lms[o] != lm or o < idx)
            for o in range(len(lms))
            if o != idx
        )
        if not dominated:
            keep.append(G[idx])
    reduced = []
    for idx, (lm, lc, g) in enumerate(keep):
        others = [t for o, t in enumerate(keep) if o != idx]
        tail = {m: c for m, c in g.items() if m != lm}
        tail = _reduce(tail, others, w)
        tail[lm] = Fraction(1)
        reduced.append(Polynomial(ring, tail))
    reduced.sort(key=lambda g: order_key(g.leading_monomial(), w))
    return GroebnerBasis(p, tuple(reduced))


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    if p.ring != gb.presentation.ring:
        raise RingMismatchError("polynomial and Groebner basis live in different rings")
    if p.is_zero():
        return p
    return Polynomial(p.ring, _reduce(p.terms, gb._triples(), p.ring.weights))


def is_artinian(gb: GroebnerBasis) -> bool:
    n = gb.presentation.ring.nvars
    lms = gb.leading_monomials
    return all(any(m[i] > 0 and sum(m) == m[i] for m in lms) for i in range(n))


class QuotientAlgebra:
    """Q[x]/I with cached normal forms and per-degree standard monomial bases.

    Instances are treated as immutable; the caches are memoisation only.
    """

    def __init__(self, presentation: Presentation, gb: Optional[GroebnerBasis] = None):
        self.presentation = presentation
        self.ring = presentation.ring
        self.gb = gb if gb is not None else groebner(presentation)
        self._triples = self.gb._triples()
        self._lms = self.gb.leading_monomials
        self.artinian = is_artinian(self.gb)
        self._basis_cache: Dict[int, Tuple[Monomial, ...]] = {}
        self._index_cache: Dict[int, Dict[Monomial, int]] = {}
        self._nf_cache: Dict[Monomial, Polynomial] = {}
        self._hilbert = None

    def __repr__(self):
        return f"QuotientAlgebra({self.presentation})"

    def is_standard(self, m: Monomial) -> bool:
        return not any(mono_divides(lm, m) for lm in self._lms)

    def basis(self, d: int) -> Tuple[Monomial, ...]:
        """Standard monomials of weighted degree ``d``, largest first."""
        if d not in self._basis_cache:
            w = self.ring.weights
            ms = [m for m in monomials_of_degree(w, d) if self.is_standard(m)] if d >= 0 else []
            ms.sort(key=lambda m: order_key(m, w), reverse=True)
            self._basis_cache[d] = tuple(ms)
            self._index_cache[d] = {m: i for i, m in enumerate(ms)}
        return self._basis_cache[d]

    def dim(self, d: int) -> int:
        return len(self.basis(d))

    @property
    def top_degree(self) -> int:
        h = self.hilbert()
        return len(h) - 1

    def hilbert(self) -> Tuple[int, ...]:
        """Coefficients of the Poincare polynomial, index = degree."""
        if self._hilbert is None:
            if not self.artinian:
                raise NotArtinianError(f"{self.presentation} is not finite-dimensional")
            bound = sum(
                (min(m[i] for m in self._lms if m[i] and sum(m) == m[i]) - 1) * w
                for i, w in enumerate(self.ring.weights)
            )
            dims = [self.dim(d) for d in range(bound + 1)]
            while len(dims) > 1 and dims[-1] == 0:
                dims.pop()
            self._hilbert = tuple(dims)
        return self._hilbert

    def total_dim(self) -> int:
        return sum(self.hilbert())

    def degrees(self):
        return [d for d, n in enumerate(self.hilbert()) if n]

    def nf(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            raise RingMismatchError("polynomial from another ring")
        out: Dict[Monomial, Fraction] = {}
        for m, c in p.terms.items():
            for k, v in self._nf_monomial(m).terms.items():
                s = out.get(k, 0) + c * v
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return Polynomial(self.ring, out)

    def _nf_monomial(self, m: Monomial) -> Polynomial:
        got = self._nf_cache.get(m)
        if got is None:
            if self.is_standard(m):
                got = Polynomial.monomial(self.ring, m)
            else:
                got = Polynomial(self.ring, _reduce({m: Fraction(1)}, self._triples, self.ring.weights))
            self._nf_cache[m] = got
        return got

    def mul(self, a: Polynomial, b: Polynomial) -> Polynomial:
        return self.nf(a * b)

    def coords(self, p: Polynomial, d: int) -> List[Fraction]:
        """Coordinates of the degree-``d`` part of NF(p) in ``basis(d)``."""
        self.basis(d)
        index = self._index_cache[d]
        v = [Fraction(0)] * len(index)
        for m, c in self.nf(p).terms.items():
            if weighted_degree(m, self.ring) == d:
                v[index[m]] = c
        return v

    def element(self, coords: Sequence, d: int) -> Polynomial:
        return Polynomial(self.ring, {m: c for m, c in zip(self.basis(d), coords) if c})

    def basis_elements(self, d: int) -> List[Polynomial]:
        return [Polynomial.monomial(self.ring, m) for m in self.basis(d)]


def quotient(p: Presentation) -> QuotientAlgebra:
    return QuotientAlgebra(p)


def monomial_basis(A: QuotientAlgebra, d: int) -> List[Monomial]:
    if d < 0:
        raise ValueError("degree must be non-negative")
    return list(A.basis(d))


def hilbert_polynomial(A: QuotientAlgebra) -> Tuple[int, ...]:
    return A.hilbert()


def _series_mul(a: List[int], b: List[int], n: int) -> List[int]:
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out


def ci_series(p: Presentation) -> Tuple[int, ...]:
    """Expand prod(1 - t^|f_i|) / prod(1 - t^w_i) as a polynomial in t."""
    ring = p.ring
    if len(p.relations) != ring.nvars:
        raise NotCompleteIntersectionError("number of relations differs from number of variables")
    degs = p.relation_degrees
    top = sum(degs) - sum(ring.weights)
    if top < 0:
        raise NotCompleteIntersectionError("relation degrees too small for a complete intersection")
    num = [1]
    for d in degs:
        num = _series_mul(num, [1] + [0] * (d - 1) + [-1], sum(degs))
    series = list(num[: top + 1]) + [0] * max(0, top + 1 - len(num))
    for w in ring.weights:
        # multiply by 1/(1 - t^w) = sum t^{kw}, truncated
        for i in range(w, top + 1):
            series[i] += series[i - w]
    # exactness: series * prod(1 - t^w_i) must reproduce the numerator
    back = series[:]
    for w in ring.weights:
        back = _series_mul(back, [1] + [0] * (w - 1) + [-1], sum(degs))
    back += [0] * (len(num) - len(back))
    if back[: len(num)] != num or any(back[len(num):]):
        raise NotCompleteIntersectionError("the series is not a polynomial")
    if any(c < 0 for c in series):
        raise NotCompleteIntersectionError("negative coefficient in the series")
    return tuple(series)


def is_waci(p: Presentation, A: Optional[QuotientAlgebra] = None) -> bool:
    if len(p.relations) != p.ring.nvars:
        return False
    if A is None:
        A = QuotientAlgebra(p)
    return A.artinian
