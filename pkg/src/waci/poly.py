"""Sparse polynomials with exact rational coefficients over a weighted ring.

Monomials are plain tuples of exponents indexed by the ring's variables.
Terms are kept in the weighted graded reverse-lexicographic order: first by
weighted degree, ties broken by grevlex on the declared variable order.

>>> R = WeightedRing(("x1", "x2"), (2, 2))
>>> f = parse("x1^2 - x2^2", R)
>>> str(f)
'x1^2 - x2^2'
>>> f.weighted_degree()
4
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

Monomial = Tuple[int, ...]
Coeff = Union[int, Fraction]


class RingMismatchError(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")


@dataclass(frozen=True)
class WeightedRing:
    """Q[x_1..x_n] with positive even weights."""

    variables: Tuple[str, ...]
    weights: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.variables:
            raise ValueError("a weighted ring needs at least one variable")
        if len(self.variables) != len(self.weights):
            raise ValueError("one weight per variable is required")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        for name in self.variables:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        for w in self.weights:
            if w < 2 or w % 2:
                raise ValueError(f"weights must be even and >= 2, got {w}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def one(self) -> "Polynomial":
        return Polynomial.constant(self, 1)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def gen(self, i: Union[int, str]) -> "Polynomial":
        if isinstance(i, str):
            i = self.index(i)
        return Polynomial.monomial(self, unit_monomial(self.nvars, i))

    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))


def unit_monomial(n: int, i: int) -> Monomial:
    return tuple(1 if j == i else 0 for j in range(n))


def weighted_degree(m: Monomial, ring: WeightedRing) -> int:
    return sum(e * w for e, w in zip(m, ring.weights))


def order_key(m: Monomial, weights: Sequence[int]):
    # larger key = larger monomial; grevlex tie-break on reversed exponents
    return (sum(e * w for e, w in zip(m, weights)), tuple(-e for e in reversed(m)))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_of_degree(weights: Sequence[int], d: int) -> Iterator[Monomial]:
    """All exponent vectors of weighted degree exactly ``d`` (any order)."""
    n = len(weights)
    if d < 0:
        return

    def rec(i: int, remaining: int, prefix: tuple):
        if i == n - 1:
            if remaining % weights[i] == 0:
                yield prefix + (remaining // weights[i],)
            return
        for e in range(remaining // weights[i] + 1):
            yield from rec(i + 1, remaining - e * weights[i], prefix + (e,))

    yield from rec(0, d, ())


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class Polynomial:
    """An immutable sparse polynomial; ``terms`` maps monomials to non-zero Fractions."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: WeightedRing, terms: Mapping[Monomial, Coeff]):
        self.ring = ring
        clean: Dict[Monomial, Fraction] = {}
        for m, c in terms.items():
            if len(m) != ring.nvars:
                raise ValueError(f"monomial {m} has wrong length for {ring.variables}")
            c = _as_fraction(c)
            if c:
                clean[tuple(m)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: WeightedRing, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        # trusted constructor: no zero coefficients, Fraction values
        p = object.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, ring: WeightedRing, c: Coeff) -> "Polynomial":
        return cls(ring, {(0,) * ring.nvars: c})

    @classmethod
    def monomial(cls, ring: WeightedRing, m: Monomial, c: Coeff = 1) -> "Polynomial":
        return cls(ring, {tuple(m): c})

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms as (monomial, coefficient), largest monomial first."""
        w = self.ring.weights
        return sorted(self._terms.items(), key=lambda t: order_key(t[0], w), reverse=True)

    def monomials(self):
        return [m for m, _ in self.items()]

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        w = self.ring.weights
        return max(self._terms, key=lambda m: order_key(m, w))

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.leading_monomial()]

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring.variables} vs {other.ring.variables}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(self.ring, {m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Coeff) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {m: v * c for m, v in self._terms.items()})

    def mul_monomial(self, m: Monomial, c: Coeff = 1) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(
            self.ring, {tuple(x + y for x, y in zip(k, m)): v * c for k, v in self._terms.items()}
        )

    def diff(self, i: int) -> "Polynomial":
        out = {}
        for m, c in self._terms.items():
            if m[i]:
                mm = list(m)
                mm[i] -= 1
                out[tuple(mm)] = c * m[i]
        return Polynomial._raw(self.ring, out)

    def weighted_degrees(self) -> set:
        return {weighted_degree(m, self.ring) for m in self._terms}

    def weighted_degree(self) -> Optional[int]:
        """Common weighted degree of all terms; None if inhomogeneous or zero."""
        degs = self.weighted_degrees()
        return degs.pop() if len(degs) == 1 else None

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(
            self.ring, {m: c for m, c in self._terms.items() if weighted_degree(m, self.ring) == d}
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    def __str__(self):
        return format_polynomial(self)


def is_weighted_homogeneous(p: Polynomial):
    """Return ``(True, degree)``, ``(True, "any")`` for zero, or ``(False, None)``."""
    if p.is_zero():
        return True, "any"
    d = p.weighted_degree()
    return (d is not None), d


def linear_part(p: Polynomial) -> Polynomial:
    return Polynomial._raw(p.ring, {m: c for m, c in p._terms.items() if sum(m) == 1})


def arith(p: Polynomial, q: Polynomial, kind: str) -> Polynomial:
    if p.ring != q.ring:
        raise RingMismatchError(f"{p.ring.variables} vs {q.ring.variables}")
    if kind == "add":
        return p + q
    if kind == "mul":
        return p * q
    raise ValueError(f"unknown kind {kind!r}")


# -- printing ---------------------------------------------------------------

def format_monomial(m: Monomial, ring: WeightedRing) -> str:
    parts = []
    for name, e in zip(ring.variables, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(p.items()):
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        mono = format_monomial(m, p.ring)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


# -- parsing ----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: WeightedRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2], self.text)
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0, self.text)
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2], self.text)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if q.is_zero():
                    raise ParseError("division by zero", pos, self.text)
                if any(sum(m) for m in q.terms) or len(q) != 1:
                    raise ParseError("can only divide by a rational constant", pos, self.text)
                p = p.scale(1 / next(iter(q.terms.values())))
        return p

    def unary(self) -> Polynomial:
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        if self.peek()[0] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("num")
            base = base ** tok[1]
        return base

    def atom(self) -> Polynomial:
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            return Polynomial.constant(self.ring, val)
        if kind == "name":
            self.take()
            if val not in self.ring.variables:
                raise ParseError(f"unknown variable {val!r}", pos, self.text)
            return self.ring.gen(val)
        if kind == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", pos, self.text)


def parse(text: str, ring: WeightedRing) -> Polynomial:
    """Parse an expression such as ``"1/2*x1^2 - (x2 + x3)^2"``."""
    return _Parser(text, ring).parse()


# -- presentations ----------------------------------------------------------

class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Presentation:
    """A weighted ring together with weighted-homogeneous relations."""

    ring: WeightedRing
    relations: Tuple[Polynomial, ...]
    label: str = ""

    def __post_init__(self):
        rels = tuple(self.relations)
        object.__setattr__(self, "relations", rels)
        for f in rels:
            if f.ring != self.ring:
                raise PresentationError("relation over a different ring")
            ok, d = is_weighted_homogeneous(f)
            if not ok or d == "any" or d <= 0:
                raise PresentationError(
                    f"relation {f} must be weighted-homogeneous of positive weight"
                )

    @classmethod
    def from_strings(cls, variables: Sequence[str], weights: Sequence[int],
                     relations: Iterable[str], label: str = "") -> "Presentation":
        ring = WeightedRing(tuple(variables), tuple(weights))
        return cls(ring, tuple(parse(r, ring) for r in relations), label)

    @property
    def relation_degrees(self) -> Tuple[int, ...]:
        return tuple(f.weighted_degree() for f in self.relations)

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return self.ring == other.ring and self.relations == other.relations

    def __hash__(self):
        return hash((self.ring, self.relations))

    def __str__(self):
        gens = ", ".join(f"{v}:{w}" for v, w in zip(self.ring.variables, self.ring.weights))
        rels = ", ".join(str(f) for f in self.relations)
        return f"Q[{gens}]/({rels})"
