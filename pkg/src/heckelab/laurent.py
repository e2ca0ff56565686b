"""Exact Laurent polynomials in one variable ``v`` with rational coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Number, Rational
from typing import Iterable, Mapping, Union

__all__ = ["LaurentPoly", "lp_add", "lp_mul", "lp_eval", "parse_laurent", "V", "ONE", "ZERO"]

Scalar = Union[int, Fraction]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class LaurentPoly:
    """An element of Q[v, v^-1].

    Stored as a tuple of ``(exponent, coefficient)`` pairs sorted by exponent,
    with no zero coefficients, so equality and hashing are structural.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for k, c in items:
            c = _as_fraction(c)
            if c:
                acc[int(k)] = acc.get(int(k), 0) + c
        self._terms = tuple(sorted((k, c) for k, c in acc.items() if c))
        self._hash = None

    @classmethod
    def _raw(cls, terms: tuple) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "LaurentPoly":
        return cls({k: c})

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPoly":
        return cls({0: c})

    # -- inspection ------------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, k: int) -> Fraction:
        for e, c in self._terms:
            if e == k:
                return c
        return Fraction(0)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[-1][0]

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return self._terms[0][0]

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for k, c in other._terms:
            s = acc.get(k, 0) + c
            if s:
                acc[k] = s
            else:
                acc.pop(k, None)
        return LaurentPoly._raw(tuple(sorted(acc.items())))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(tuple((k, -c) for k, c in self._terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        acc: dict[int, Fraction] = {}
        for k1, c1 in self._terms:
            for k2, c2 in other._terms:
                k = k1 + k2
                acc[k] = acc.get(k, 0) + c1 * c2
        return LaurentPoly._raw(tuple(sorted((k, c) for k, c in acc.items() if c)))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "LaurentPoly":
        """Inverse of a unit, i.e. a nonzero monomial."""
        if len(self._terms) != 1:
            raise ZeroDivisionError("only monomials are units in Q[v, v^-1]")
        k, c = self._terms[0]
        return LaurentPoly._raw(((-k, 1 / c),))

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ``ValueError`` if ``other`` does not divide ``self``."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        lead_k, lead_c = other._terms[-1]
        span = lead_k - other._terms[0][0]
        rem = self
        quot: dict[int, Fraction] = {}
        # Each step cancels the top term; the remainder's width must stay >= span.
        while rem:
            k, c = rem._terms[-1]
            if k - rem._terms[0][0] < span:
                raise ValueError(f"{other} does not divide {self}")
            qk, qc = k - lead_k, c / lead_c
            quot[qk] = qc
            rem = rem - LaurentPoly._raw(((qk, qc),)) * other
        return LaurentPoly(quot)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        return LaurentPoly._raw(tuple((e + k, c) for e, c in self._terms))

    def substitute_power(self, m: int) -> "LaurentPoly":
        """Return p(v^m)."""
        return LaurentPoly({e * m: c for e, c in self._terms})

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == LaurentPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    # -- evaluation ------------------------------------------------------

    def __call__(self, z):
        return lp_eval(self, z)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def __str__(self):
        return format_laurent(self)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
V = LaurentPoly.monomial(1)


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_eval(p: LaurentPoly, z) -> complex:
    """Evaluate ``p`` at the nonzero complex number ``z`` in double precision."""
    z = complex(z)
    if z == 0:
        raise ValueError("Laurent polynomials cannot be evaluated at 0")
    if not p._terms:
        return 0j
    # Horner in v over the shifted polynomial v^{-low} p.
    low = p._terms[0][0]
    coeffs = dict(p._terms)
    acc = 0j
    for k in range(p._terms[-1][0], low - 1, -1):
        acc = acc * z + float(coeffs.get(k, 0))
    return acc * z**low


# -- text format -------------------------------------------------------------


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_laurent(p: LaurentPoly) -> str:
    if not p._terms:
        return "0"
    out: list[str] = []
    for k, c in p._terms:
        mag = abs(c)
        if k == 0:
            body = _format_coeff(mag)
        else:
            var = "v" if k == 1 else f"v^{k}"
            body = var if mag == 1 else f"{_format_coeff(mag)}*{var}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*(?P<star>\*)?\s*)?
        (?P<var>v(?:\s*\^\s*(?P<exp>[+-]?\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the output of ``str(LaurentPoly)``: e.g. ``"v^-2 - 1"``, ``"3/2*v + 2"``."""
    s = text.strip()
    if s in ("", "0"):
        return ZERO
    # Optional single pair of wrapping parentheses.
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    pos, terms, first = 0, {}, True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse Laurent polynomial {text!r} at offset {pos}")
        if m.group("sign") is None and not first:
            raise ValueError(f"missing operator in {text!r} at offset {pos}")
        if m.group("coef") is None and m.group("var") is None:
            raise ValueError(f"empty term in {text!r} at offset {pos}")
        if m.group("star") and m.group("var") is None:
            raise ValueError(f"dangling '*' in {text!r}")
        c = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") == "-":
            c = -c
        if m.group("var") is None:
            k = 0
        else:
            k = int(m.group("exp")) if m.group("exp") is not None else 1
        terms[k] = terms.get(k, 0) + c
        pos, first = m.end(), False
    return LaurentPoly(terms)


def as_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.constant(x)
    if isinstance(x, str):
        return parse_laurent(x)
    if isinstance(x, Number):
        raise TypeError("floating-point scalars are not exact; pass int, Fraction or LaurentPoly")
    raise TypeError(f"cannot convert {type(x).__name__} to LaurentPoly")
