"""Example families: split, Eisenbud-Levine, truncated and flag presentations,
plus the Weyl degree tables used to rule out homogeneous spaces."""

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .derivations import derivation_space
from .duality import Orientation
from .homotopy import pi1
from .linalg import rank
from .poly import Polynomial, Presentation, WeightedRing
from .quotient import QuotientAlgebra, is_waci


class FamilyError(ValueError):
    pass


class UnknownTypeError(KeyError):
    pass


class BasisAssertionError(AssertionError):
    pass


# -- split family -------------------------------------------------------------

@dataclass(frozen=True)
class SplitParams:
    n: int
    k: int
    weights: Tuple[int, ...]
    exponents: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "exponents", tuple(self.exponents))
        if self.n < 2 or self.k < 1:
            raise FamilyError("need n >= 2 and k >= 1")
        if len(self.weights) != self.n or len(self.exponents) != self.n:
            raise FamilyError("need n weights and n exponents")
        if any(w <= 0 or w % 2 for w in self.weights):
            raise FamilyError("weights must be positive and even")
        if any(a < 2 for a in self.exponents):
            raise FamilyError("exponents must be >= 2")
        prods = {w * a for w, a in zip(self.weights, self.exponents)}
        if len(prods) != 1:
            raise FamilyError(f"w_i * a_i must be constant, got {sorted(prods)}")

    @property
    def d(self) -> int:
        return self.weights[0] * self.exponents[0]

    @classmethod
    def from_weights(cls, n: int, k: int, weights: Sequence[int]) -> "SplitParams":
        """Smallest common d = lcm of the weights, a_i = d / w_i (each at least 2)."""
        from math import lcm

        d = lcm(*weights)
        if any(d // w < 2 for w in weights):
            d *= 2
        return cls(n, k, tuple(weights), tuple(d // w for w in weights))


def _names(n: int) -> Tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def split_family(p: SplitParams) -> Presentation:
    ring = WeightedRing(_names(p.n), p.weights)
    x = ring.gens()
    a = p.exponents
    rels = [x[i] ** a[i] - x[i + 1] ** a[i + 1] for i in range(p.n - 1)]
    rels.append(x[-1] ** (2 * p.k * a[-1]))
    label = f"split(n={p.n},k={p.k},w={','.join(map(str, p.weights))})"
    return Presentation(ring, tuple(rels), label)


def split_hilbert(p: SplitParams) -> Tuple[int, ...]:
    """(1 - t^d)^(n-1) (1 - t^(2kd)) / prod(1 - t^w_i) by exact polynomial division."""
    d = p.d
    num = [1]
    for deg in [d] * (p.n - 1) + [2 * p.k * d]:
        nxt = [0] * (len(num) + deg)
        for i, c in enumerate(num):
            nxt[i] += c
            nxt[i + deg] -= c
        num = nxt
    for w in p.weights:
        # divide by (1 - t^w): q_i = num_i + q_{i-w}
        q = [0] * (len(num) - w)
        for i in range(len(q)):
            q[i] = num[i] + (q[i - w] if i >= w else 0)
        # remainder must vanish
        for i in range(len(q), len(num)):
            if num[i] + (q[i - w] if i - w < len(q) else 0) != 0:
                raise FamilyError("series is not a polynomial")
        num = q
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


def split_isotropic(p: SplitParams, A: Optional[QuotientAlgebra] = None) -> List[Polynomial]:
    """N = span{x_n^(a_n s) * x^c : 0 <= s < k, 0 <= c_i < a_i}; verified to be
    a half-dimensional subspace with N . N = 0 under the Poincare pairing."""
    from itertools import product

    pres = split_family(p)
    if A is None:
        A = QuotientAlgebra(pres)
    ring = A.ring
    n, a = p.n, p.exponents
    elems = []
    for s in range(p.k):
        for c in product(*[range(ai) for ai in a]):
            m = list(c)
            m[-1] += a[-1] * s
            elems.append(A.nf(Polynomial.monomial(ring, tuple(m))))
    top = A.top_degree
    omega = Orientation(A, A.basis(top)[0], top)
    # independence: coordinates in the full monomial basis
    allmons = [m for d in A.degrees() for m in A.basis(d)]
    rows = [[e.coefficient(m) for m in allmons] for e in elems]
    if rank(rows, len(allmons)) != len(elems):
        raise BasisAssertionError("N is not linearly independent in A")
    if 2 * len(elems) != A.total_dim():
        raise BasisAssertionError(f"dim A = {A.total_dim()} != 2 dim N = {2 * len(elems)}")
    for i, e in enumerate(elems):
        for f in elems[i:]:
            if omega.evaluate(e * f):
                raise BasisAssertionError(f"N is not isotropic: <{e} * {f}, omega> != 0")
    return elems


# -- Eisenbud-Levine family ---------------------------------------------------

def eisenbud_levine(n: int) -> Presentation:
    if n < 3:
        raise FamilyError("the Eisenbud-Levine family needs n >= 3")
    ring = WeightedRing(_names(n), (2,) * n)
    x = ring.gens()
    rels = [x[i] ** 2 - x[-1] ** 2 for i in range(n - 1)]
    prod_ = ring.one()
    for g in x:
        prod_ = prod_ * g
    rels.append(prod_)
    return Presentation(ring, tuple(rels), f"EL({n})")


def el_size(p: Presentation) -> Optional[int]:
    """n if ``p`` is literally eisenbud_levine(n) (same names, weights, relations)."""
    n = p.ring.nvars
    if n < 3:
        return None
    try:
        ref = eisenbud_levine(n)
    except FamilyError:
        return None
    same = (p.ring == ref.ring
            and [f.terms for f in p.relations] == [f.terms for f in ref.relations])
    return n if same else None


@dataclass(frozen=True)
class ELBasisElement:
    r: int
    subset: Tuple[int, ...]  # 1-based indices in I

    def polynomial(self, ring: WeightedRing) -> Polynomial:
        y0 = ring.gen(ring.nvars - 1) ** 2
        out = y0 ** self.r
        for i in self.subset:
            out = out * ring.gen(i - 1)
        return out

    @property
    def degree(self) -> int:
        return 4 * self.r + 2 * len(self.subset)


def el_orientation(A: QuotientAlgebra, n: int) -> Orientation:
    """omega = y0^(n-1) = x_n^(2(n-1)), written against the top standard monomial."""
    ring = A.ring
    y = A.nf(ring.gen(n - 1) ** (2 * (n - 1)))
    if len(y.terms) != 1:
        raise BasisAssertionError("y0^(n-1) is not a multiple of one standard monomial")
    (m, c), = y.terms.items()
    return Orientation(A, m, 4 * (n - 1), c)


def el_basis(n: int, A: Optional[QuotientAlgebra] = None) -> List[ELBasisElement]:
    """The family {y0^r x_I : 0 <= r < |complement of I|}, checked to be a basis of
    EL(n) whose pairing against y0^(n-1) is 1 exactly when I = J and
    r + s = n - 1 - |I|, and 0 otherwise."""
    if A is None:
        A = QuotientAlgebra(eisenbud_levine(n))
    ring = A.ring
    elems = []
    for size in range(n + 1):
        for I in combinations(range(1, n + 1), size):
            for r in range(n - size):
                elems.append(ELBasisElement(r, I))
    if len(elems) != A.total_dim():
        raise BasisAssertionError(f"{len(elems)} elements but dim A = {A.total_dim()}")
    for d in A.degrees():
        sl = [e for e in elems if e.degree == d]
        rows = [A.coords(e.polynomial(ring), d) for e in sl]
        if len(sl) != A.dim(d) or rank(rows, A.dim(d)) != len(sl):
            raise BasisAssertionError(f"degree {d} slice is not a basis")
    omega = el_orientation(A, n)
    polys = [e.polynomial(ring) for e in elems]
    for i, e in enumerate(elems):
        for j, f in enumerate(elems):
            if e.degree + f.degree != omega.top_degree:
                continue
            want = int(e.subset == f.subset and e.r + f.r == n - 1 - len(e.subset))
            if omega.evaluate(polys[i] * polys[j]) != want:
                raise BasisAssertionError(f"pairing rule fails for {e} and {f}")
    return elems


# -- truncated and flag presentations ----------------------------------------

def truncated(power: int, weight: int, name: str = "x") -> Presentation:
    if power < 2:
        raise FamilyError("power must be >= 2")
    if weight <= 0 or weight % 2:
        raise FamilyError("weight must be positive and even")
    ring = WeightedRing((name,), (weight,))
    return Presentation(ring, (ring.gen(0) ** power,), f"Q[{name}]/({name}^{power}), |{name}|={weight}")


def truncated_params(p: Presentation) -> Optional[Tuple[int, int]]:
    """(power, weight) if ``p`` is Q[x]/(x^power), else None."""
    if p.ring.nvars != 1 or len(p.relations) != 1:
        return None
    terms = p.relations[0].terms
    if len(terms) != 1:
        return None
    (m, c), = terms.items()
    if c == 0 or m[0] < 2:
        return None
    return m[0], p.ring.weights[0]


def elementary_symmetric(ring: WeightedRing, i: int) -> Polynomial:
    out = ring.zero()
    for S in combinations(range(ring.nvars), i):
        t = ring.one()
        for j in S:
            t = t * ring.gen(j)
        out = out + t
    return out


def flag_presentation(r: int) -> Presentation:
    """H*(SU(r+1)/T): Q[x_1..x_(r+1)] modulo the elementary symmetric polynomials."""
    if r < 2:
        raise FamilyError("rank must be >= 2")
    ring = WeightedRing(_names(r + 1), (2,) * (r + 1))
    rels = tuple(elementary_symmetric(ring, i) for i in range(1, r + 2))
    return Presentation(ring, rels, f"flag(SU({r + 1})/T)")


# -- Weyl degree table --------------------------------------------------------

_EXCEPTIONAL_DIMS = {"G2": 14, "F4": 52, "E6": 78, "E7": 133, "E8": 248}


def group_dimension(type_: str) -> int:
    """dim G from the classical formulas, independent of the degree table."""
    if type_ in _EXCEPTIONAL_DIMS:
        return _EXCEPTIONAL_DIMS[type_]
    series, n = type_[0], int(type_[1:])
    if series == "A":
        return n * n + 2 * n
    if series in "BC":
        return 2 * n * n + n
    if series == "D":
        return 2 * n * n - n
    raise UnknownTypeError(type_)


@lru_cache(maxsize=None)
def weyl_table() -> Dict[str, Tuple[Tuple[int, ...], int]]:
    text = resources.files("waci").joinpath("data/weyl_degrees.txt").read_text()
    table = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        t, degs, dim = line.split()
        degrees = tuple(int(x) for x in degs.split(","))
        dim = int(dim)
        if sum(2 * d - 1 for d in degrees) != dim or group_dimension(t) != dim:
            raise ValueError(f"Weyl table row {t} fails the dimension check")
        table[t] = (degrees, dim)
    return table


def weyl_degrees(type_: str) -> Tuple[int, ...]:
    try:
        return weyl_table()[type_][0]
    except KeyError:
        raise UnknownTypeError(type_) from None


def multiplicity_ok(type_: str) -> bool:
    degs = weyl_degrees(type_)
    return all(degs.count(d) <= 2 for d in degs)


@dataclass(frozen=True)
class HomogeneityVerdict:
    verdict: str
    reason: str
    table_derived: bool = False


def nonhomogeneity_check(p: Presentation, A: Optional[QuotientAlgebra] = None) -> HomogeneityVerdict:
    """Rule out H*(G/K) for equal rank G/K with the two arguments available:
    (a) some pi_1 degree occurs 3 or more times while der^0 is 1-dimensional
    (forcing G simple) and no simple type has a degree of multiplicity > 2;
    (b) some pi_1 degree is not -1 mod 4 and the implied invariant degrees
    (delta + 1)/2 match no table row of the same rank."""
    if A is None:
        A = QuotientAlgebra(p)
    if not is_waci(p, A):
        return HomogeneityVerdict("inconclusive", "not a WACI")
    odd = pi1(p, A)
    if derivation_space(A, 0).dim != 1:
        return HomogeneityVerdict("inconclusive", "der^0 is not 1-dimensional, G need not be simple")
    table = weyl_table()
    crowded = [delta for delta, mult in odd.items() if mult >= 3]
    if crowded and all(multiplicity_ok(t) for t in table):
        delta = min(crowded)
        return HomogeneityVerdict(
            "not homogeneous",
            f"pi_1 has {odd[delta]} generators in degree {delta}; every simple type has multiplicity <= 2",
        )
    if any(delta % 4 != 3 for delta in odd):
        inv = sorted(d for delta, mult in odd.items() for d in [(delta + 1) // 2] * mult)
        rank_ = len(inv)
        matches = [t for t, (degs, _) in table.items() if len(degs) == rank_ and sorted(degs) == inv]
        degs = ",".join(str(delta) for delta, mult in sorted(odd.items()) for _ in range(mult))
        if not matches:
            return HomogeneityVerdict(
                "not homogeneous",
                f"pi_1 degrees ({degs}) include one not congruent to -1 mod 4 and match no Weyl table row",
                True,
            )
        return HomogeneityVerdict("inconclusive", f"pi_1 degrees ({degs}) match {', '.join(matches)}", True)
    return HomogeneityVerdict("inconclusive", "neither argument applies")
