"""Exact multivariate polynomial arithmetic over the rationals.

This is the universal scalar of the workbench: every structure constant,
twist-map entry, and residual is one of these.  Coefficients are
`fractions.Fraction` (never floats), parameters are named indeterminates,
and the representation is canonical, so equality with the zero polynomial
is an exact yes/no decision.

Representation:

  Monomial   = tuple of (name, exponent) pairs, sorted by name, exponents > 0;
               the empty tuple is the constant monomial.
  Polynomial = tuple of (monomial, coefficient) terms, no zero coefficients,
               no duplicate monomials, sorted by the canonical monomial order.

Canonical monomial order: by name tuple (lexicographic), then total degree,
then exponent tuple.  The constant monomial sorts first.  Any fixed total
order would do; this one is frozen by the round-trip tests.

Text grammar (parse/str are mutually inverse on canonical forms):

  expr    := term (('+' | '-') term)*
  term    := factor ('*' factor)*
  factor  := '-' factor | primary ('^' INT)?      -- INT must be positive
  primary := INT ('/' INT)? | NAME | '(' expr ')'
  NAME    := [A-Za-z][A-Za-z0-9_]*

Implicit multiplication ("2a") is deliberately a syntax error: table
transcriptions must spell out every '*'.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Monomial = tuple

ScalarLike = Union[int, Fraction]

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<sym>[-+*^/()])"
)


class ParseError(ValueError):
    """Syntax error in polynomial text; `offset` is the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


def _mono_key(mono: Monomial):
    names = tuple(n for n, _ in mono)
    exps = tuple(e for _, e in mono)
    return (names, sum(exps), exps)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    merged: dict = {}
    for name, exp in a:
        merged[name] = exp
    for name, exp in b:
        merged[name] = merged.get(name, 0) + exp
    return tuple(sorted(merged.items()))


class Polynomial:
    """Immutable canonical-form polynomial; supports +, -, *, ** and scalars."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple] = ()):
        acc: dict = {}
        for mono, coeff in terms:
            coeff = Fraction(coeff)
            if coeff:
                prev = acc.get(mono)
                total = coeff if prev is None else prev + coeff
                if total:
                    acc[mono] = total
                elif prev is not None:
                    del acc[mono]
        object.__setattr__(
            self, "terms", tuple(sorted(acc.items(), key=lambda t: _mono_key(t[0])))
        )

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return _ZERO

    @staticmethod
    def one() -> "Polynomial":
        return _ONE

    @staticmethod
    def constant(value: ScalarLike) -> "Polynomial":
        return Polynomial((((), Fraction(value)),))

    @staticmethod
    def variable(name: str) -> "Polynomial":
        if not _NAME_RE.match(name):
            raise ValueError(f"invalid parameter name {name!r}")
        return Polynomial(((((name, 1),), Fraction(1)),))

    @staticmethod
    def parse(text: str) -> "Polynomial":
        return _Parser(text).run()

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return Polynomial(self.terms + other.terms)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial((m, -c) for m, c in self.terms)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            scale = Fraction(other)
            return Polynomial((m, c * scale) for m, c in self.terms)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = []
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                out.append((_mono_mul(m1, m2), c1 * c2))
        return Polynomial(out)

    def __rmul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = _ONE
        for _ in range(exponent):
            result = result * self
        return result

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def parameters(self) -> frozenset:
        return frozenset(name for mono, _ in self.terms for name, _ in mono)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0])

    def as_fraction(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if self.is_constant():
            return self.terms[0][1]
        raise ValueError(f"polynomial {self} is not constant")

    def total_degree(self) -> int:
        return max((sum(e for _, e in m) for m, _ in self.terms), default=0)

    # -- substitution ------------------------------------------------------

    def specialize(self, bindings: Mapping[str, ScalarLike]) -> "Polynomial":
        """Substitute rational values for a subset of parameters."""
        if not bindings:
            return self
        values = {name: Fraction(v) for name, v in bindings.items()}
        out = []
        for mono, coeff in self.terms:
            kept = []
            for name, exp in mono:
                if name in values:
                    coeff = coeff * values[name] ** exp
                else:
                    kept.append((name, exp))
            out.append((tuple(kept), coeff))
        return Polynomial(out)

    def substitute(self, bindings: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Substitute polynomials for parameters (the ring endomorphism
        extending the bindings; unbound parameters persist)."""
        if not bindings:
            return self
        acc = _ZERO
        for mono, coeff in self.terms:
            term = Polynomial.constant(coeff)
            for name, exp in mono:
                factor = bindings.get(name)
                if factor is None:
                    factor = Polynomial.variable(name)
                term = term * factor ** exp
            acc = acc + term
        return acc

    def reduce_imaginary(self, name: str = "i") -> "Polynomial":
        """Rewrite powers of `name` using name^2 = -1 (Gaussian reduction)."""
        out = []
        for mono, coeff in self.terms:
            kept = []
            for n, exp in mono:
                if n == name:
                    half, rem = divmod(exp, 2)
                    coeff = coeff * (-1) ** half
                    if rem:
                        kept.append((n, 1))
                else:
                    kept.append((n, exp))
            out.append((tuple(kept), coeff))
        return Polynomial(out)

    # -- hashing / printing --------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for index, (mono, coeff) in enumerate(self.terms):
            body = _term_text(mono, abs(coeff))
            if index == 0:
                parts.append(("-" if coeff < 0 else "") + body)
            else:
                parts.append((" - " if coeff < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial.parse({str(self)!r})"


def _term_text(mono: Monomial, coeff: Fraction) -> str:
    mono_text = "*".join(n if e == 1 else f"{n}^{e}" for n, e in mono)
    if not mono_text:
        return str(coeff)
    if coeff == 1:
        return mono_text
    return f"{coeff}*{mono_text}"


_ZERO = Polynomial()
_ONE = Polynomial.constant(1)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        while pos < len(text):
            match = _TOKEN_RE.match(text, pos)
            if match is None:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            if match.lastgroup != "ws":
                self.tokens.append((match.lastgroup, match.group(), match.start()))
            pos = match.end()
        self.tokens.append(("end", "", len(text)))
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def run(self) -> Polynomial:
        result = self.expr()
        kind, value, offset = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", offset)
        return result

    def expr(self) -> Polynomial:
        node = self.term()
        while True:
            kind, value, _ = self.peek()
            if kind == "sym" and value in "+-":
                self.advance()
                rhs = self.term()
                node = node + rhs if value == "+" else node - rhs
            else:
                return node

    def term(self) -> Polynomial:
        node = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "sym" and value == "*":
                self.advance()
                node = node * self.factor()
            else:
                return node

    def factor(self) -> Polynomial:
        kind, value, _ = self.peek()
        if kind == "sym" and value == "-":
            self.advance()
            return -self.factor()
        base = self.primary()
        kind, value, _ = self.peek()
        if kind == "sym" and value == "^":
            self.advance()
            kind, value, offset = self.advance()
            if kind != "int":
                raise ParseError("exponent must be a positive integer", offset)
            exponent = int(value)
            if exponent <= 0:
                raise ParseError("exponent must be a positive integer", offset)
            return base ** exponent
        return base

    def primary(self) -> Polynomial:
        kind, value, offset = self.advance()
        if kind == "int":
            numerator = int(value)
            kind2, value2, _ = self.peek()
            if kind2 == "sym" and value2 == "/":
                self.advance()
                kind3, value3, offset3 = self.advance()
                if kind3 != "int":
                    raise ParseError("expected integer denominator", offset3)
                denominator = int(value3)
                if denominator == 0:
                    raise ParseError("denominator literal is zero", offset3)
                return Polynomial.constant(Fraction(numerator, denominator))
            return Polynomial.constant(numerator)
        if kind == "name":
            return Polynomial.variable(value)
        if kind == "sym" and value == "(":
            inner = self.expr()
            kind2, value2, offset2 = self.advance()
            if not (kind2 == "sym" and value2 == ")"):
                raise ParseError("expected ')'", offset2)
            return inner
        raise ParseError(
            f"expected a number, parameter, or '(' (got {value!r})"
            if value
            else "unexpected end of input",
            offset,
        )


def parse(text: str) -> Polynomial:
    return Polynomial.parse(text)


ZERO = _ZERO
ONE = _ONE
