"""Graded derivations of a quotient algebra A = Q[x]/I.

A degree-p derivation is determined by the images theta(x_i) in A^{w_i + p};
such images extend to a derivation of A exactly when every relation f_j is
sent to zero, theta(f_j) = sum_i (df_j/dx_i) theta(x_i) = 0 in A.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import List, Sequence, Tuple

from .linalg import nullspace, rank, span_equal
from .poly import Polynomial, Presentation, PresentationError, WeightedRing
from .quotient import QuotientAlgebra


class AlgebraMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Derivation:
    algebra: QuotientAlgebra
    degree: int
    images: Tuple[Polynomial, ...]

    def __call__(self, p: Polynomial) -> Polynomial:
        A = self.algebra
        out = A.ring.zero()
        for i, img in enumerate(self.images):
            if img:
                dp = p.diff(i)
                if dp:
                    out = out + dp * img
        return A.nf(out)

    def coordinates(self) -> List[Fraction]:
        A = self.algebra
        v = []
        for w, img in zip(A.ring.weights, self.images):
            v.extend(A.coords(img, w + self.degree))
        return v

    def is_valid(self) -> bool:
        return all(not self(f) for f in self.algebra.presentation.relations)

    def scale(self, c) -> "Derivation":
        return Derivation(self.algebra, self.degree, tuple(img.scale(c) for img in self.images))

    def __add__(self, other: "Derivation") -> "Derivation":
        if other.algebra is not self.algebra or other.degree != self.degree:
            raise AlgebraMismatchError("derivations of different algebras or degrees")
        return Derivation(self.algebra, self.degree,
                          tuple(a + b for a, b in zip(self.images, other.images)))

    def __sub__(self, other: "Derivation") -> "Derivation":
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return (self.algebra is other.algebra and self.degree == other.degree
                and self.images == other.images)

    def __hash__(self):
        return hash((id(self.algebra), self.degree, self.images))

    def __str__(self):
        names = self.algebra.ring.variables
        return "{" + ", ".join(f"{x} -> {img}" for x, img in zip(names, self.images)) + "}"


@dataclass(frozen=True)
class DerivationSpace:
    algebra: QuotientAlgebra
    degree: int
    basis: Tuple[Derivation, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, theta: Derivation) -> bool:
        rows = [b.coordinates() for b in self.basis]
        n = len(theta.coordinates())
        return rank(rows + [theta.coordinates()], n) == rank(rows, n)


def _unknown_layout(A: QuotientAlgebra, p: int):
    layout = []
    for i, w in enumerate(A.ring.weights):
        d = w + p
        for m in (A.basis(d) if d >= 0 else ()):
            layout.append((i, d, m))
    return layout


def derivation_space(A: QuotientAlgebra, p: int) -> DerivationSpace:
    """Basis of der^p(A) from the linear system theta(f_j) = 0."""
    layout = _unknown_layout(A, p)
    ring = A.ring
    if not layout:
        return DerivationSpace(A, p, ())
    columns = []
    for i, d, m in layout:
        x = Polynomial.monomial(ring, m)
        col = []
        for f in A.presentation.relations:
            dfi = f.diff(i)
            col.extend(A.coords(dfi * x, f.weighted_degree() + p))
        columns.append(col)
    nrows = len(columns[0])
    rows = [[columns[c][r] for c in range(len(columns))] for r in range(nrows)]
    kernel = nullspace(rows, len(layout)) if nrows else [
        [Fraction(int(i == j)) for j in range(len(layout))] for i in range(len(layout))
    ]
    basis = []
    for v in kernel:
        images = [ring.zero()] * ring.nvars
        for (i, d, m), c in zip(layout, v):
            if c:
                images[i] = images[i] + Polynomial.monomial(ring, m, c)
        basis.append(Derivation(A, p, tuple(images)))
    return DerivationSpace(A, p, tuple(basis))


def negative_degrees(A: QuotientAlgebra) -> List[int]:
    """Even p in [-max w_i, -2]: the only negative degrees that can carry derivations."""
    return list(range(-max(A.ring.weights), 0, 2))


def negative_derivations_vanish(A: QuotientAlgebra) -> bool:
    return all(derivation_space(A, p).dim == 0 for p in negative_degrees(A))


def euler_derivation(A: QuotientAlgebra) -> Derivation:
    ring = A.ring
    images = tuple(A.nf(g.scale(w)) for g, w in zip(ring.gens(), ring.weights))
    return Derivation(A, 0, images)


def bracket(t1: Derivation, t2: Derivation) -> Derivation:
    """Graded commutator t1 t2 - t2 t1 (both degrees are even)."""
    if t1.algebra is not t2.algebra:
        raise AlgebraMismatchError("derivations of different algebras")
    if t1.degree % 2 or t2.degree % 2:
        raise ValueError("only even-degree derivations are supported")
    images = tuple(t1(b) - t2(a) for a, b in zip(t1.images, t2.images))
    return Derivation(t1.algebra, t1.degree + t2.degree, images)


def tensor_presentation(p1: Presentation, p2: Presentation, suffix: str = "_2") -> Presentation:
    """Presentation of the tensor product; clashing names in ``p2`` get ``suffix``."""
    taken = set(p1.ring.variables)
    names2 = []
    for v in p2.ring.variables:
        new = v + suffix if v in taken else v
        if new in taken or new in names2:
            raise PresentationError(f"variable name collision on {v!r}")
        names2.append(new)
    ring = WeightedRing(p1.ring.variables + tuple(names2), p1.ring.weights + p2.ring.weights)
    n1 = p1.ring.nvars
    rels = [Polynomial(ring, {m + (0,) * p2.ring.nvars: c for m, c in f.terms.items()})
            for f in p1.relations]
    rels += [Polynomial(ring, {(0,) * n1 + m: c for m, c in f.terms.items()})
             for f in p2.relations]
    label = f"{p1.label} (x) {p2.label}" if p1.label and p2.label else ""
    return Presentation(ring, tuple(rels), label)


# -- brute-force oracle -----------------------------------------------------

def brute_force_derivations(A: QuotientAlgebra, p: int) -> List[List[Fraction]]:
    """Solve for theta as an arbitrary degree-p linear map of A satisfying
    Leibniz on every pair of basis monomials.  Returns a basis of the
    solution space projected to generator images (same coordinates as
    ``Derivation.coordinates``)."""
    degs = [d for d in A.degrees()]
    unknown = {}
    for d in degs:
        for a, m in enumerate(A.basis(d)):
            for b, t in enumerate(A.basis(d + p)):
                unknown[(m, t)] = len(unknown)
    nunk = len(unknown)
    ring = A.ring

    def theta_of(poly: Polynomial):
        # theta(poly) as {target monomial: {unknown index: coeff}}
        out = {}
        for m, c in A.nf(poly).terms.items():
            d = sum(e * w for e, w in zip(m, ring.weights))
            for t in A.basis(d + p):
                out.setdefault(t, {})
                k = unknown[(m, t)]
                out[t][k] = out[t].get(k, 0) + c
        return out

    rows = []
    all_mons = [m for d in degs for m in A.basis(d)]
    for i, m1 in enumerate(all_mons):
        for m2 in all_mons[i:]:
            P1 = Polynomial.monomial(ring, m1)
            P2 = Polynomial.monomial(ring, m2)
            lhs = theta_of(P1 * P2)
            # theta(m1)*m2 + m1*theta(m2)
            rhs = {}
            for src, other in ((m1, P2), (m2, P1)):
                d = sum(e * w for e, w in zip(src, ring.weights))
                for t in A.basis(d + p):
                    k = unknown[(src, t)]
                    for tm, c in A.nf(Polynomial.monomial(ring, t) * other).terms.items():
                        rhs.setdefault(tm, {})
                        rhs[tm][k] = rhs[tm].get(k, 0) + c
            for tm in set(lhs) | set(rhs):
                row = [Fraction(0)] * nunk
                for k, c in lhs.get(tm, {}).items():
                    row[k] += c
                for k, c in rhs.get(tm, {}).items():
                    row[k] -= c
                if any(row):
                    rows.append(row)
    kernel = nullspace(rows, nunk) if rows else [
        [Fraction(int(i == j)) for j in range(nunk)] for i in range(nunk)
    ]
    projected = []
    for v in kernel:
        coords = []
        for i, w in enumerate(ring.weights):
            img = {}
            gen = A.nf(ring.gen(i))
            for m, c in gen.terms.items():
                for t in A.basis(w + p):
                    img[t] = img.get(t, 0) + c * v[unknown[(m, t)]]
            coords.extend(Fraction(img.get(t, 0)) for t in A.basis(w + p) if w + p >= 0)
        projected.append(coords)
    return projected


def oracle_agrees(A: QuotientAlgebra, p: int) -> bool:
    space = derivation_space(A, p)
    fast = [b.coordinates() for b in space.basis]
    slow = brute_force_derivations(A, p)
    ncols = sum(len(A.basis(w + p)) for w in A.ring.weights if w + p >= 0)
    if len(slow) != space.dim:
        return False
    return span_equal(fast, slow, ncols) if ncols else space.dim == 0
