"""Pseudo-homotopy groups of a WACI and the simplicity classifier.

For a presentation Q[x_1..x_n]/(f_1..f_n) put Y = span{y_j} with
|y_j| = |f_j| - 1 and X = span{x_i}.  The linear-part map L : Y -> X sends
y_j to the linear part of f_j.  Then pi_1 = ker L (graded by |y_j|) and
pi_0 = coker L (graded by the variable weights).
"""

from dataclasses import dataclass, field
from typing import Dict, Optional

from .derivations import derivation_space, negative_derivations_vanish
from .linalg import rank
from .poly import Presentation, linear_part, monomials_of_degree, unit_monomial
from .quotient import QuotientAlgebra, is_waci


class NotWACIError(ValueError):
    pass


class TrivialAlgebraError(ValueError):
    """k_A is undefined for A = Q."""


class LinearPartError(ValueError):
    pass


@dataclass(frozen=True)
class PseudoHomotopy:
    pi1: Dict[int, int]
    pi0: Dict[int, int]
    kA: Optional[int]
    rank_L: int


def _require_waci(p: Presentation, A: Optional[QuotientAlgebra]):
    if not is_waci(p, A):
        raise NotWACIError(f"{p} is not a weighted artinian complete intersection")


def linear_part_matrix(p: Presentation):
    """Rows indexed by variables, columns by relations."""
    n = p.ring.nvars
    cols = []
    for f in p.relations:
        lin = linear_part(f)
        cols.append([lin.coefficient(unit_monomial(n, i)) for i in range(n)])
    return [[cols[j][i] for j in range(len(cols))] for i in range(n)]


def _blocks(p: Presentation):
    # L preserves weight: y_j (|f_j|) can only hit variables of weight |f_j|
    L = linear_part_matrix(p)
    degs = p.relation_degrees
    weights = p.ring.weights
    out = {}
    for D in sorted(set(degs) | set(weights)):
        rows = [i for i, w in enumerate(weights) if w == D]
        cols = [j for j, d in enumerate(degs) if d == D]
        block = [[L[i][j] for j in cols] for i in rows]
        r = rank(block, len(cols)) if rows and cols else 0
        out[D] = (len(rows), len(cols), r)
    return out


def pi1(p: Presentation, A: Optional[QuotientAlgebra] = None) -> Dict[int, int]:
    _require_waci(p, A)
    return {D - 1: ncols - r for D, (_, ncols, r) in _blocks(p).items() if ncols - r}


def pi0(p: Presentation, A: Optional[QuotientAlgebra] = None) -> Dict[int, int]:
    _require_waci(p, A)
    return {D: nrows - r for D, (nrows, _, r) in _blocks(p).items() if nrows - r}


def k_invariant(p: Presentation, A: Optional[QuotientAlgebra] = None) -> int:
    """max{k : pi_1^{2k-1} != 0}."""
    odd = pi1(p, A)
    if not odd:
        raise TrivialAlgebraError("pi_1 vanishes: the algebra is Q")
    return (max(odd) + 1) // 2


def pseudo_homotopy(p: Presentation, A: Optional[QuotientAlgebra] = None) -> PseudoHomotopy:
    _require_waci(p, A)
    p1 = pi1(p, A)
    kA = (max(p1) + 1) // 2 if p1 else None
    r = sum(b[2] for b in _blocks(p).values())
    return PseudoHomotopy(p1, pi0(p, A), kA, r)


def minimal_generators_in_degree(p: Presentation, d: int) -> int:
    """dim (I / Q^+[x] I) in degree d, for a presentation with no linear parts."""
    if any(linear_part(f) for f in p.relations):
        raise LinearPartError("relations must have no linear part")
    ring = p.ring
    w = ring.weights
    all_rows, decomposable = [], []
    index = {}
    for j, f in enumerate(p.relations):
        e = d - f.weighted_degree()
        if e < 0:
            continue
        for m in monomials_of_degree(w, e):
            g = f.mul_monomial(m)
            all_rows.append(g)
            if e > 0:
                decomposable.append(g)
    for g in all_rows:
        for m in g.terms:
            index.setdefault(m, len(index))

    def vec(g):
        v = [0] * len(index)
        for m, c in g.terms.items():
            v[index[m]] = c
        return v

    n = len(index)
    if not n:
        return 0
    return rank([vec(g) for g in all_rows], n) - rank([vec(g) for g in decomposable], n)


@dataclass(frozen=True)
class SimplicityReport:
    is_waci: bool
    der_neg_zero: Optional[bool] = None
    der0_dim: Optional[int] = None
    kA: Optional[int] = None
    top_pi1_dim: Optional[int] = None
    verdict: str = "not a WACI"

    @property
    def simple(self) -> bool:
        return self.verdict == "simple"


def is_simple(p: Presentation, A: Optional[QuotientAlgebra] = None) -> SimplicityReport:
    if A is None:
        A = QuotientAlgebra(p)
    if not is_waci(p, A):
        return SimplicityReport(False)
    neg = negative_derivations_vanish(A)
    d0 = derivation_space(A, 0).dim
    odd = pi1(p, A)
    kA = (max(odd) + 1) // 2 if odd else None
    top = odd.get(2 * kA - 1, 0) if kA else 0
    if not neg:
        verdict = "fails (i): negative-degree derivations exist"
    elif d0 != 1:
        verdict = f"fails (ii): dim der^0 = {d0}"
    elif kA is None:
        verdict = "fails (iii): the algebra is Q"
    elif top != 1:
        verdict = f"fails (iii): dim pi_1^{2 * kA - 1} = {top}"
    else:
        verdict = "simple"
    return SimplicityReport(True, neg, d0, kA, top, verdict)
