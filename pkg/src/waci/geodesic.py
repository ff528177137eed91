"""Monomial actions, their characteristic polynomials, and the arithmetic
impossibility behind invariant geodesics.

A monomial action sends y_j to lambda_j y_sigma(j).  Its characteristic
polynomial factors over the cycles of sigma as prod (z^s_i - gamma_i), where
gamma_i is the product of the lambdas on the i-th cycle.  If all gamma_i are
integers, |P(0)| = |P(1)| = 1 is impossible: |P(0)| = 1 forces every gamma_i
to be +-1, and then P(1) is 0 or a power of 2 greater than 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import List, Optional, Sequence, Tuple

from .homotopy import is_simple, k_invariant
from .poly import Presentation
from .quotient import QuotientAlgebra


@dataclass(frozen=True)
class MonomialAction:
    sigma: Tuple[int, ...]  # 0-based permutation: y_j -> lambda_j y_sigma[j]
    lambdas: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "lambdas", tuple(Fraction(x) for x in self.lambdas))
        if sorted(self.sigma) != list(range(len(self.sigma))):
            raise ValueError("sigma is not a permutation")
        if len(self.lambdas) != len(self.sigma):
            raise ValueError("need one scalar per basis vector")

    @property
    def size(self) -> int:
        return len(self.sigma)

    def cycles(self) -> List[Tuple[int, ...]]:
        seen, out = set(), []
        for start in range(self.size):
            if start in seen:
                continue
            cyc, j = [], start
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self.sigma[j]
            out.append(tuple(cyc))
        return out

    def matrix(self) -> List[List[Fraction]]:
        s = self.size
        M = [[Fraction(0)] * s for _ in range(s)]
        for j, (i, lam) in enumerate(zip(self.sigma, self.lambdas)):
            M[i][j] = lam
        return M


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@dataclass(frozen=True)
class CharPolyProduct:
    cycle_lengths: Tuple[int, ...]
    gammas: Tuple[Fraction, ...]
    coefficients: Tuple[Fraction, ...]  # ascending powers of z

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, z) -> Fraction:
        z = Fraction(z)
        return sum((c * z ** i for i, c in enumerate(self.coefficients)), Fraction(0))

    @property
    def at_zero(self) -> Fraction:
        return self.coefficients[0]

    @property
    def at_one(self) -> Fraction:
        return sum(self.coefficients, Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)


def char_poly_from_cycles(lengths: Sequence[int], gammas: Sequence) -> CharPolyProduct:
    coeffs = [Fraction(1)]
    gammas = tuple(Fraction(g) for g in gammas)
    for s, g in zip(lengths, gammas):
        coeffs = _poly_mul(coeffs, [-g] + [Fraction(0)] * (s - 1) + [Fraction(1)])
    return CharPolyProduct(tuple(lengths), gammas, tuple(coeffs))


def char_poly(act: MonomialAction) -> CharPolyProduct:
    cycles = act.cycles()
    gammas = []
    for cyc in cycles:
        g = Fraction(1)
        for j in cyc:
            g *= act.lambdas[j]
        gammas.append(g)
    return char_poly_from_cycles([len(c) for c in cycles], gammas)


def dense_char_poly(M: Sequence[Sequence]) -> Tuple[Fraction, ...]:
    """det(z I - M) through sympy, ascending coefficients."""
    import sympy

    z = sympy.Symbol("z")
    S = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in M])
    P = sympy.Poly((z * sympy.eye(S.rows) - S).det(method="berkowitz"), z)
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(P.all_coeffs())]
    return tuple(coeffs)


def gamma_integrality(c: CharPolyProduct) -> bool:
    """False is the alarm: P has integer coefficients while some gamma_i does not."""
    if not c.is_integral():
        return True
    return all(g.denominator == 1 for g in c.gammas)


def gauss_lemma_sweep(max_size: int = 3, max_den: int = 4, max_num: int = 4) -> Tuple[int, int]:
    """Every cycle type of total size <= max_size and every gamma = a/b with
    1 <= b <= max_den, |a| <= max_num.  Returns (cases, alarms)."""
    values = sorted({Fraction(a, b) for b in range(1, max_den + 1)
                     for a in range(-max_num, max_num + 1)})
    cases = alarms = 0
    for size in range(1, max_size + 1):
        for lengths in _compositions_sorted(size):
            for gammas in product(values, repeat=len(lengths)):
                cases += 1
                if not gamma_integrality(char_poly_from_cycles(lengths, gammas)):
                    alarms += 1
    return cases, alarms


def _compositions_sorted(n: int, largest: Optional[int] = None) -> List[Tuple[int, ...]]:
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    return [(f,) + rest for f in range(min(n, largest), 0, -1)
            for rest in _compositions_sorted(n - f, f)]


@dataclass(frozen=True)
class SearchResult:
    found: Optional[CharPolyProduct]
    examined: int


def unimodular_search(max_cycles: int, gamma_bound: int, max_cycle_length: int = 1,
                      prune: bool = True) -> SearchResult:
    """Look for integer data (s_i, gamma_i), at most ``max_cycles`` cycles,
    |gamma_i| <= gamma_bound, s_i <= max_cycle_length, with |P(0)| = |P(1)| = 1.

    With ``prune`` the enumeration skips branches whose partial |prod gamma|
    is 0 or exceeds 1; since |gamma_i| are integers this loses nothing.
    """
    if max_cycles < 1 or gamma_bound < 1 or max_cycle_length < 1:
        raise ValueError("bounds must be >= 1")
    pairs = [(s, g) for s in range(1, max_cycle_length + 1)
             for g in range(-gamma_bound, gamma_bound + 1)]
    examined = 0

    def leaf(data) -> Optional[CharPolyProduct]:
        c = char_poly_from_cycles([s for s, _ in data], [g for _, g in data])
        if abs(c.at_zero) == 1 and abs(c.at_one) == 1:
            return c
        return None

    if not prune:
        for m in range(1, max_cycles + 1):
            for data in combinations_with_replacement(pairs, m):
                examined += 1
                p0 = p1 = 1
                for _, g in data:
                    p0 *= g
                    p1 *= 1 - g
                if abs(p0) == 1 and abs(p1) == 1:
                    hit = leaf(data)
                    if hit is not None:
                        return SearchResult(hit, examined)
        return SearchResult(None, examined)

    def dfs(start: int, data: list, prod0: int):
        nonlocal examined
        if data:
            examined += 1
            hit = leaf(data)
            if hit is not None:
                return hit
        if len(data) == max_cycles:
            return None
        for idx in range(start, len(pairs)):
            s, g = pairs[idx]
            p = prod0 * g
            if p == 0 or abs(p) > 1:
                continue
            data.append((s, g))
            hit = dfs(idx, data, p)
            data.pop()
            if hit is not None:
                return hit
        return None

    return SearchResult(dfs(0, [], 1), examined)


def unimodular_pair_exists(max_cycles: int, gamma_bound: int, max_cycle_length: int = 1) -> bool:
    return unimodular_search(max_cycles, gamma_bound, max_cycle_length).found is not None


@dataclass(frozen=True)
class FactorVerdict:
    label: str
    simple: bool
    reason: str
    k: Optional[int] = None


@dataclass(frozen=True)
class GeodesicReport:
    factors: Tuple[FactorVerdict, ...]
    k: Optional[int]
    critical: Tuple[int, ...]  # indices j with k_j = k
    conclusion: str

    @property
    def obstruction_applies(self) -> bool:
        return self.k is not None


def geodesic_report(factors: Sequence[Presentation]) -> GeodesicReport:
    verdicts = []
    for i, p in enumerate(factors):
        A = QuotientAlgebra(p)
        rep = is_simple(p, A)
        label = p.label or f"factor {i + 1}"
        k = k_invariant(p, A) if rep.simple else None
        verdicts.append(FactorVerdict(label, rep.simple, rep.verdict, k))
    if not verdicts:
        return GeodesicReport((), None, (), "no factors given")
    bad = [v for v in verdicts if not v.simple]
    if bad:
        v = bad[0]
        return GeodesicReport(tuple(verdicts), None, (),
                              f"not verified: {v.label} is not simple ({v.reason})")
    k = max(v.k for v in verdicts)
    crit = tuple(i for i, v in enumerate(verdicts) if v.k == k)
    return GeodesicReport(
        tuple(verdicts), k, crit,
        "HH verified: the unimodularity obstruction applies, invariant geodesics exist "
        "for every isometry of any realizing closed manifold",
    )
