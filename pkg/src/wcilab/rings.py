"""Exact sparse polynomial arithmetic over the rationals with weighted gradings.

A :class:`GradedRing` is a polynomial ring over Q whose variables carry one
integer weight each (and optionally a second weight, used for bigraded
constructions).  A :class:`Poly` is a canonical sparse map from exponent
tuples to nonzero :class:`fractions.Fraction` coefficients; no floating point
appears anywhere.

Printing orders terms by weighted graded-reverse-lexicographic comparison
with the fixed variable order as tie-break, so output is deterministic and
``parse_poly(str(p), p.ring) == p``.

The external polynomial grammar (ASCII, whitespace insignificant, no
parentheses):

    poly       := ["+"|"-"] term (("+"|"-") term)*
    term       := coeff | coeff "*" monomial | monomial
    coeff      := integer | integer "/" positive-integer
    monomial   := factor ("*" factor)*
    factor     := identifier | identifier "^" positive-integer
    identifier := letter (letter|digit|"_")*
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

Monomial = tuple[int, ...]

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

# Exponents stay far below this in practice; the parser rejects anything
# larger so downstream arithmetic cannot silently wrap on any platform.
MAX_EXPONENT = 2**31 - 1


class ParseError(ValueError):
    """Syntax or semantic error in the external polynomial syntax."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class GradedRing:
    """A polynomial ring over Q with one or two integer gradings.

    ``weights`` is the primary grading (strictly positive for geometric
    rings; :func:`make_ring` enforces this).  ``second_weights`` is an
    optional second grading and may contain zero or negative entries; it is
    only used by bigraded constructions.
    """

    variables: tuple[str, ...]
    weights: tuple[int, ...]
    second_weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if len(self.variables) < 1:
            raise ValueError("a ring needs at least one variable")
        if len(self.weights) != len(self.variables):
            raise ValueError("weights and variable names differ in length")
        if self.second_weights is not None and len(self.second_weights) != len(self.variables):
            raise ValueError("second weights and variable names differ in length")
        seen = set()
        for name in self.variables:
            if not _IDENT_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate variable name {name!r}")
            seen.add(name)
        if not all(isinstance(w, int) for w in self.weights):
            raise ValueError("weights must be integers")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None

    def degree_of(self, mono: Monomial) -> int:
        """Primary weighted degree of an exponent tuple."""
        return sum(e * w for e, w in zip(mono, self.weights))

    def second_degree_of(self, mono: Monomial) -> int:
        if self.second_weights is None:
            raise ValueError("ring has no second grading")
        return sum(e * w for e, w in zip(mono, self.second_weights))

    def zero_mono(self) -> Monomial:
        return (0,) * self.nvars


def make_ring(names, weights, second_weights=None) -> GradedRing:
    """Build a geometric graded ring; primary weights must be positive."""
    names = tuple(names)
    weights = tuple(weights)
    if len(names) != len(weights):
        raise ValueError("names and weights differ in length")
    for w in weights:
        if not isinstance(w, int) or w <= 0:
            raise ValueError(f"non-positive primary weight {w}")
    second = tuple(second_weights) if second_weights is not None else None
    return GradedRing(names, weights, second)


# ---------------------------------------------------------------------------
# monomial helpers (exponent tuples)
# ---------------------------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True if a | b, i.e. every exponent of a is <= the one of b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    """b / a, assuming a | b."""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def grevlex_key(mono: Monomial, weights) -> tuple:
    """Ascending sort key for weighted graded-reverse-lex order.

    Larger weighted degree wins; on ties the monomial with the smaller
    exponent in the last differing position is the larger one.
    """
    deg = sum(e * w for e, w in zip(mono, weights))
    return (deg, tuple(-e for e in reversed(mono)))


def monomials_of_degree(weights, degree: int) -> list[Monomial]:
    """All exponent tuples of the given weighted degree (weights positive)."""
    if any(w <= 0 for w in weights):
        raise ValueError("degree enumeration requires positive weights")
    if degree < 0:
        return []
    out: list[Monomial] = []
    n = len(weights)

    def rec(i, remaining, prefix):
        if i == n - 1:
            if remaining % weights[i] == 0:
                out.append(prefix + (remaining // weights[i],))
            return
        w = weights[i]
        for e in range(remaining // w + 1):
            rec(i + 1, remaining - e * w, prefix + (e,))

    rec(0, degree, ())
    return out


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: GradedRing, terms=None):
        canonical = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff != 0:
                    canonical[mono] = coeff
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", canonical)

    def __setattr__(self, *a):  # pragma: no cover - guard rail
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(ring: GradedRing) -> "Poly":
        return Poly(ring, {})

    @staticmethod
    def constant(ring: GradedRing, value) -> "Poly":
        return Poly(ring, {ring.zero_mono(): Fraction(value)})

    @staticmethod
    def variable(ring: GradedRing, name: str) -> "Poly":
        i = ring.index(name)
        mono = tuple(1 if j == i else 0 for j in range(ring.nvars))
        return Poly(ring, {mono: Fraction(1)})

    @staticmethod
    def monomial(ring: GradedRing, mono: Monomial, coeff=1) -> "Poly":
        return Poly(ring, {tuple(mono): Fraction(coeff)})

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    __hash__ = None

    def __len__(self) -> int:
        return len(self.terms)

    # -- arithmetic ---------------------------------------------------------

    def _check_ring(self, other: "Poly"):
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_ring(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            new = out.get(mono, 0) + coeff
            if new:
                out[mono] = new
            else:
                out.pop(mono, None)
        return Poly(self.ring, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check_ring(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            new = out.get(mono, 0) - coeff
            if new:
                out[mono] = new
            else:
                out.pop(mono, None)
        return Poly(self.ring, out)

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly.zero(self.ring)
            return Poly(self.ring, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = mono_mul(ma, mb)
                new = out.get(mono, 0) + ca * cb
                if new:
                    out[mono] = new
                else:
                    out.pop(mono, None)
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = Poly.constant(self.ring, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def mul_term(self, mono: Monomial, coeff) -> "Poly":
        """Multiply by coeff * x^mono in one pass."""
        coeff = Fraction(coeff)
        if coeff == 0:
            return Poly.zero(self.ring)
        return Poly(self.ring, {mono_mul(m, mono): c * coeff for m, c in self.terms.items()})

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        weights = self.ring.weights
        items = sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0], weights), reverse=True)
        pieces = []
        for i, (mono, coeff) in enumerate(items):
            negative = coeff < 0
            body = _format_term(self.ring, mono, abs(coeff))
            if i == 0:
                pieces.append("-" + body if negative else body)
            else:
                pieces.append((" - " if negative else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({self})"


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _format_term(ring: GradedRing, mono: Monomial, coeff: Fraction) -> str:
    factors = []
    for name, e in zip(ring.variables, mono):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    if not factors:
        return _format_fraction(coeff)
    body = "*".join(factors)
    if coeff == 1:
        return body
    return _format_fraction(coeff) + "*" + body


# ---------------------------------------------------------------------------
# degrees and derivatives
# ---------------------------------------------------------------------------

def weighted_degree(p: Poly) -> int | None:
    """Common primary degree of all terms, or None if inhomogeneous.

    Raises on the zero polynomial, whose degree is undefined here.
    """
    if p.is_zero():
        raise ValueError("weighted degree of the zero polynomial is undefined")
    degrees = {p.ring.degree_of(m) for m in p.terms}
    if len(degrees) == 1:
        return degrees.pop()
    return None


def second_weighted_degree(p: Poly) -> int | None:
    """Common second-grading degree of all terms, or None if inhomogeneous."""
    if p.is_zero():
        raise ValueError("weighted degree of the zero polynomial is undefined")
    degrees = {p.ring.second_degree_of(m) for m in p.terms}
    if len(degrees) == 1:
        return degrees.pop()
    return None


def partial_derivative(p: Poly, var: str) -> Poly:
    """Formal partial derivative with exact rational coefficients."""
    i = p.ring.index(var)
    out: dict[Monomial, Fraction] = {}
    for mono, coeff in p.terms.items():
        e = mono[i]
        if e == 0:
            continue
        lowered = mono[:i] + (e - 1,) + mono[i + 1:]
        out[lowered] = out.get(lowered, Fraction(0)) + coeff * e
    return Poly(p.ring, out)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[+\-*/^]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[bad_at]!r}", bad_at)
        if m.lastgroup == "num":
            tokens.append(("num", m.group("num"), m.start("num")))
        elif m.lastgroup == "ident":
            tokens.append(("ident", m.group("ident"), m.start("ident")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, ring: GradedRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, message):
        raise ParseError(message, self.peek()[2])

    def parse(self) -> Poly:
        terms: dict[Monomial, Fraction] = {}
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.next()
            sign = -1 if value == "-" else 1
        elif kind is None:
            self.fail("empty polynomial")
        while True:
            coeff, mono = self.parse_term()
            coeff *= sign
            new = terms.get(mono, Fraction(0)) + coeff
            if new:
                terms[mono] = new
            else:
                terms.pop(mono, None)
            kind, value, _ = self.peek()
            if kind is None:
                break
            if kind == "op" and value in "+-":
                self.next()
                sign = -1 if value == "-" else 1
            else:
                self.fail(f"expected '+' or '-', found {value!r}")
        return Poly(self.ring, terms)

    def parse_term(self) -> tuple[Fraction, Monomial]:
        kind, value, _ = self.peek()
        if kind == "num":
            self.next()
            numerator = int(value)
            coeff = Fraction(numerator)
            kind, value, pos = self.peek()
            if kind == "op" and value == "/":
                self.next()
                dkind, dvalue, _ = self.peek()
                if dkind != "num":
                    self.fail("expected denominator")
                self.next()
                denominator = int(dvalue)
                if denominator <= 0:
                    raise ParseError("denominator must be positive", pos)
                coeff = Fraction(numerator, denominator)
                kind, value, pos = self.peek()
            if kind == "op" and value == "*":
                self.next()
                return coeff, self.parse_monomial()
            return coeff, self.ring.zero_mono()
        if kind == "ident":
            return Fraction(1), self.parse_monomial()
        self.fail("expected a term")

    def parse_monomial(self) -> Monomial:
        exps = [0] * self.ring.nvars
        while True:
            kind, value, pos = self.peek()
            if kind != "ident":
                self.fail("expected variable name")
            self.next()
            try:
                idx = self.ring.index(value)
            except ValueError:
                raise ParseError(f"unknown variable {value!r}", pos) from None
            exponent = 1
            kind, value, _ = self.peek()
            if kind == "op" and value == "^":
                self.next()
                ekind, evalue, epos = self.peek()
                if ekind != "num":
                    self.fail("expected exponent")
                self.next()
                exponent = int(evalue)
                if exponent < 1:
                    raise ParseError("exponent must be positive", epos)
                if exponent > MAX_EXPONENT:
                    raise ParseError("exponent overflow", epos)
            exps[idx] += exponent
            if exps[idx] > MAX_EXPONENT:
                raise ParseError("exponent overflow", pos)
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.next()
                continue
            return tuple(exps)


def parse_poly(text: str, ring: GradedRing) -> Poly:
    """Parse the external polynomial syntax into a canonical Poly."""
    return _Parser(text, ring).parse()
