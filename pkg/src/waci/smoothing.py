"""Rational surgery obstructions for Poincare duality algebras.

Three conditions on a pair (omega, q), with q = 1 + q_1 + ... + q_k, q_i in A^{4i}:
the Pontrjagin numbers <q_I, omega> must be those of a smooth manifold, the
middle form must be a sum of signed squares, and the signature must equal
<L_k(q), omega>.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List, Optional, Tuple

from .duality import NotPDAError, Orientation, is_pda, middle_form, orientation
from .families import el_orientation, el_size, truncated_params
from .linalg import inverse
from .poly import Monomial, Polynomial, WeightedRing, format_polynomial
from .quadform import integrality, signature
from .quotient import QuotientAlgebra


class FormalDimensionMismatch(ValueError):
    """The formal dimension is not a multiple of 4."""


Partition = Tuple[int, ...]


def partitions(k: int, largest: Optional[int] = None) -> List[Partition]:
    """Partitions of k as non-increasing tuples, in reverse lexicographic order."""
    if largest is None:
        largest = k
    if k == 0:
        return [()]
    out = []
    for first in range(min(k, largest), 0, -1):
        out.extend((first,) + rest for rest in partitions(k - first, first))
    return out


def partition_label(part: Partition) -> str:
    counts: Dict[int, int] = {}
    for i in part:
        counts[i] = counts.get(i, 0) + 1
    return "*".join(f"p{i}" + (f"^{e}" if e > 1 else "") for i, e in sorted(counts.items()))


def _exponents(part: Partition, k: int) -> Monomial:
    return tuple(part.count(i) for i in range(1, k + 1))


# -- Hirzebruch L-polynomials ---------------------------------------------------

def pontrjagin_ring(k: int) -> WeightedRing:
    return WeightedRing(tuple(f"p{i}" for i in range(1, k + 1)), tuple(4 * i for i in range(1, k + 1)))


def _series_log(b: List[Fraction]) -> List[Fraction]:
    """log of 1 + b_1 t + b_2 t^2 + ... (b[0] must be 1)."""
    n = len(b)
    a = [Fraction(0)] * n
    for m in range(1, n):
        a[m] = b[m] - sum((j * a[j] * b[m - j] for j in range(1, m)), Fraction(0)) / m
    return a


def _q_series(k: int) -> List[Fraction]:
    """Coefficients of sqrt(t)/tanh(sqrt(t)) up to t^k."""
    num = [Fraction(1, factorial(2 * n)) for n in range(k + 1)]
    den = [Fraction(1, factorial(2 * n + 1)) for n in range(k + 1)]
    out = []
    for n in range(k + 1):
        out.append(num[n] - sum((out[j] * den[n - j] for j in range(n)), Fraction(0)))
    return out


@dataclass(frozen=True)
class LPolynomial:
    k: int
    polynomial: Polynomial

    def coefficient(self, part: Partition) -> Fraction:
        return self.polynomial.coefficient(_exponents(part, self.k))

    def evaluate_numbers(self, numbers: Dict[Partition, Fraction]) -> Fraction:
        """Value given the Pontrjagin numbers, keyed by partitions of k."""
        total = Fraction(0)
        for m, c in self.polynomial.terms.items():
            part = tuple(i for i in range(self.k, 0, -1) for _ in range(m[i - 1]))
            total += c * Fraction(numbers[part])
        return total

    def __str__(self):
        return format_polynomial(self.polynomial)


def l_polynomial(k: int) -> LPolynomial:
    """k-th polynomial of the multiplicative sequence of sqrt(t)/tanh(sqrt(t))."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ring = pontrjagin_ring(k)
    p = [ring.one()] + list(ring.gens())  # p[i] = i-th elementary symmetric function
    a = _series_log(_q_series(k))
    # power sums s_m by Newton's identities
    s = [ring.zero()]
    for m in range(1, k + 1):
        acc = p[m].scale((-1) ** (m - 1) * m)
        for i in range(1, m):
            acc = acc + (p[i] * s[m - i]).scale((-1) ** (i - 1))
        s.append(acc)
    F = [ring.zero()] + [s[m].scale(a[m]) for m in range(1, k + 1)]
    # exponentiate: n E_n = sum_m m F_m E_{n-m}
    E = [ring.one()]
    for n in range(1, k + 1):
        acc = ring.zero()
        for m in range(1, n + 1):
            acc = acc + (F[m] * E[n - m]).scale(m)
        E.append(acc.scale(Fraction(1, n)))
    return LPolynomial(k, E[k])


def cp_pontrjagin_coeffs(k: int) -> List[int]:
    """p(CP^{2k}) = (1 + u^2)^(2k+1): c_i = binom(2k+1, i)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return [comb(2 * k + 1, i) for i in range(1, k + 1)]


def cp_signature(k: int) -> Fraction:
    """<L_k(p(CP^{2k})), [CP^{2k}]>, which must be 1."""
    return l_polynomial(k).evaluate_numbers(cp_product_numbers((k,), k))


def cp_product_numbers(factors: Partition, k: int) -> Dict[Partition, Fraction]:
    """Pontrjagin numbers of CP^{2 f_1} x ... x CP^{2 f_r}, sum f_j = k."""
    r = len(factors)
    ring = WeightedRing(tuple(f"u{j}" for j in range(r)), (2,) * r)
    bounds = [2 * f for f in factors]

    def trunc(poly: Polynomial) -> Polynomial:
        return Polynomial(ring, {m: c for m, c in poly.terms.items()
                                 if all(e <= b for e, b in zip(m, bounds))})

    total = ring.one()
    for j, f in enumerate(factors):
        u2 = ring.gen(j) ** 2
        total = trunc(total * (ring.one() + u2) ** (2 * f + 1))
    classes = [total.homogeneous_part(4 * i) for i in range(k + 1)]
    top = tuple(bounds)
    out = {}
    for part in partitions(k):
        prod_ = ring.one()
        for i in part:
            prod_ = trunc(prod_ * classes[i])
        out[part] = prod_.coefficient(top)
    return out


# -- Pontrjagin classes on an algebra ------------------------------------------

@dataclass(frozen=True)
class PontrjaginClass:
    algebra: QuotientAlgebra
    components: Tuple[Polynomial, ...]  # q_1..q_k, q_0 = 1 implicit

    def __post_init__(self):
        A = self.algebra
        comps = tuple(A.nf(q) for q in self.components)
        object.__setattr__(self, "components", comps)
        for i, q in enumerate(comps, start=1):
            if q and q.weighted_degree() != 4 * i:
                raise ValueError(f"q_{i} must lie in degree {4 * i}")

    @property
    def k(self) -> int:
        return len(self.components)

    @classmethod
    def trivial(cls, A: QuotientAlgebra, k: int) -> "PontrjaginClass":
        return cls(A, tuple(A.ring.zero() for _ in range(k)))

    def __str__(self):
        parts = ["1"] + [f"q{i}={q}" for i, q in enumerate(self.components, start=1) if q]
        return ", ".join(parts)


def el_pontrjagin_class(A: QuotientAlgebra) -> PontrjaginClass:
    """q_i = 2^i c_i y0^i with y0 = x_n^2 and c_i the CP^{2(n-1)} coefficients."""
    n = el_size(A.presentation)
    if n is None:
        raise ValueError("not an Eisenbud-Levine presentation")
    k = n - 1
    y0 = A.ring.gen(n - 1) ** 2
    c = cp_pontrjagin_coeffs(k)
    return PontrjaginClass(A, tuple((y0 ** i).scale(2 ** i * c[i - 1]) for i in range(1, k + 1)))


def cp_class(A: QuotientAlgebra) -> PontrjaginClass:
    """(1 + x^2)^(N+1) on Q[x]/(x^(N+1)) with |x| = 2."""
    tp = truncated_params(A.presentation)
    if tp is None or tp[1] != 2 or (tp[0] - 1) % 2:
        raise ValueError("not the cohomology of CP^N with N even")
    N = tp[0] - 1
    x2 = A.ring.gen(0) ** 2
    k = N // 2
    return PontrjaginClass(A, tuple((x2 ** i).scale(comb(N + 1, i)) for i in range(1, k + 1)))


def _require_4k(omega: Orientation) -> int:
    m = omega.top_degree
    if m % 4:
        raise FormalDimensionMismatch(f"formal dimension {m} is not a multiple of 4")
    return m // 4


def pontrjagin_numbers(A: QuotientAlgebra, q: PontrjaginClass,
                       omega: Optional[Orientation] = None) -> Dict[Partition, Fraction]:
    if omega is None:
        omega = orientation(A)
    k = _require_4k(omega)
    comps = list(q.components) + [A.ring.zero()] * (k - q.k)
    out = {}
    for part in partitions(k):
        prod_ = A.ring.one()
        for i in part:
            prod_ = A.nf(prod_ * comps[i - 1])
        out[part] = omega.evaluate(prod_)
    return out


def l_value(A: QuotientAlgebra, q: PontrjaginClass, omega: Optional[Orientation] = None) -> Fraction:
    """<L_k(q_1..q_k), omega>."""
    if omega is None:
        omega = orientation(A)
    k = _require_4k(omega)
    return l_polynomial(k).evaluate_numbers(pontrjagin_numbers(A, q, omega))


def middle_signature(A: QuotientAlgebra, omega: Optional[Orientation] = None) -> int:
    return signature(middle_form(A, omega))


def check_signature_formula(A: QuotientAlgebra, q: PontrjaginClass,
                            omega: Optional[Orientation] = None) -> bool:
    if omega is None:
        omega = orientation(A)
    _require_4k(omega)
    return middle_signature(A, omega) == l_value(A, q, omega)


@dataclass(frozen=True)
class NumbersVerdict:
    verdict: str  # "pass", "fail" or "unknown"
    coefficients: Optional[Dict[Partition, Fraction]] = None


@lru_cache(maxsize=None)
def _cp_lattice_inverse(k: int):
    parts = partitions(k)
    return inverse([[cp_product_numbers(f, k)[p] for p in parts] for f in parts])


def realizable_numbers(numbers: Dict[Partition, Fraction], k: int) -> NumbersVerdict:
    """Decide whether ``numbers`` are Pontrjagin numbers of a closed smooth manifold.

    pass: an integer combination of products of even complex projective spaces has
    them; fail: some number is not an integer; unknown otherwise.
    """
    parts = partitions(k)
    if any(Fraction(numbers[p]).denominator != 1 for p in parts):
        return NumbersVerdict("fail")
    if all(numbers[p] == 0 for p in parts):
        return NumbersVerdict("pass", {p: Fraction(0) for p in parts})
    vec = [Fraction(numbers[p]) for p in parts]
    # solve coeff * rows = vec, rows = numbers of the CP products
    inv = _cp_lattice_inverse(k)
    coeff = [sum(vec[j] * inv[j][i] for j in range(len(parts))) for i in range(len(parts))]
    coeffs = dict(zip(parts, coeff))
    if all(c.denominator == 1 for c in coeff):
        return NumbersVerdict("pass", coeffs)
    return NumbersVerdict("unknown", coeffs)


def truncated_divisibility(k: int) -> bool:
    """For A_k = Q[x]/(x^3), |x| = 2k, k odd: signature +-1 must be divisible by 2^(2k-1) - 1."""
    if k < 1 or k % 2 == 0:
        raise ValueError("k must be odd and positive")
    return 1 % (2 ** (2 * k - 1) - 1) == 0


@dataclass(frozen=True)
class CandidateResult:
    name: str
    q: str
    numbers: Dict[str, Fraction]
    numbers_verdict: str
    integrality: bool
    signature: int
    l_value: Fraction

    @property
    def passes(self) -> bool:
        return self.numbers_verdict == "pass" and self.integrality and self.signature == self.l_value


@dataclass(frozen=True)
class SmoothabilityReport:
    m: int
    branch: str
    verdict: str
    candidates: Tuple[CandidateResult, ...] = ()
    certificate: Optional[str] = None
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def smoothable(self) -> bool:
        return self.verdict.startswith("smoothable")


def _candidate(A, name, q, omega, form_ok) -> CandidateResult:
    k = omega.top_degree // 4
    nums = pontrjagin_numbers(A, q, omega)
    nv = realizable_numbers(nums, k)
    L = l_polynomial(k).evaluate_numbers(nums)
    return CandidateResult(name, str(q), {partition_label(p): v for p, v in nums.items()},
                           nv.verdict, form_ok, middle_signature(A, omega), L)


def smoothability_report(A: QuotientAlgebra, omega: Optional[Orientation] = None,
                         q: Optional[PontrjaginClass] = None) -> SmoothabilityReport:
    if not is_pda(A):
        raise NotPDAError(f"{A.presentation} is not a Poincare duality algebra")
    m = A.top_degree
    if m % 4:
        return SmoothabilityReport(m, "m != 4k", "smoothable (formal dimension not divisible by 4)")
    k = m // 4
    notes = []
    tp = truncated_params(A.presentation)
    if tp is not None and tp[0] == 3 and (tp[1] // 2) % 2 == 1 and tp[1] > 2:
        kk = tp[1] // 2
        return SmoothabilityReport(
            m, "m = 4k",
            f"obstructed (signature 1 is not divisible by 2^{2 * kk - 1} - 1 = {2 ** (2 * kk - 1) - 1})",
        )
    el_n = el_size(A.presentation)
    if omega is None:
        omega = el_orientation(A, el_n) if el_n else orientation(A)
    if omega.top_degree != m:
        raise ValueError("orientation does not live in the top degree")
    form_ok = integrality(middle_form(A, omega)).integral
    cands = []
    if q is not None:
        cands.append(("supplied", q))
    else:
        cands.append(("trivial", PontrjaginClass.trivial(A, k)))
        if el_n:
            cands.append(("Eisenbud-Levine class", el_pontrjagin_class(A)))
        if tp is not None and tp[1] == 2 and (tp[0] - 1) % 2 == 0:
            cands.append(("projective space class", cp_class(A)))
    results = tuple(_candidate(A, name, cq, omega, form_ok) for name, cq in cands)
    for r in results:
        if r.passes:
            return SmoothabilityReport(m, "m = 4k", "smoothable (certificate found)", results,
                                       f"{r.name}: {r.q}", tuple(notes))
    if not form_ok:
        notes.append("middle form is not a sum of signed squares for this orientation")
    return SmoothabilityReport(m, "m = 4k", "unknown (no certificate among candidates)", results,
                               None, tuple(notes))
