"""Iwahori-Hecke algebras of finite and affine type A, Coxeter presentation.

The quadratic relation is ``(T_s + 1)(T_s - v^-2) = 0``, i.e.
``T_s^2 = (v^-2 - 1) T_s + v^-2``; products with ``l(xy) = l(x) + l(y)``
multiply as in the group.  Affine algebras are infinite dimensional, so
multiplication accepts an optional length ``cutoff``: a product whose support
leaves the ball of that radius raises :class:`CutoffExceeded` instead of
being silently truncated.
"""

from __future__ import annotations

import re
from typing import Mapping

from .coxeter import (
    AFFINE,
    FINITE,
    Permutation,
    format_word,
    from_word,
    identity,
    generator,
    iter_group,
    length,
    parse_word,
    reduced_decomposition,
)
from .laurent import ONE, ZERO, LaurentPoly, as_laurent, parse_laurent

__all__ = [
    "HeckeElement",
    "CutoffExceeded",
    "mul_gen_basis",
    "mul",
    "invert_generator",
    "inverse_basis",
    "verify_presentation",
    "PresentationReport",
    "parse_hecke",
    "Q",
    "QUAD_LINEAR",
]

Q = LaurentPoly.monomial(-2)  # the quadratic eigenvalue v^-2
QUAD_LINEAR = Q - 1  # v^-2 - 1


class CutoffExceeded(ArithmeticError):
    """A product left the length-truncated part of an affine Hecke algebra."""


class HeckeElement:
    """A finite linear combination of basis elements ``T_w``."""

    __slots__ = ("kind", "rank", "terms")

    def __init__(self, kind: str, rank: int, terms: Mapping[Permutation, LaurentPoly] | None = None):
        self.kind = kind
        self.rank = rank
        clean = {}
        for w, c in (terms or {}).items():
            c = as_laurent(c)
            if w.kind != kind or w.rank != rank:
                raise ValueError(f"basis element {w!r} does not belong to the {kind} rank-{rank} algebra")
            if c:
                clean[w] = c
        self.terms: dict[Permutation, LaurentPoly] = clean

    @classmethod
    def _wrap(cls, kind, rank, terms):
        obj = cls.__new__(cls)
        obj.kind, obj.rank, obj.terms = kind, rank, terms
        return obj

    @classmethod
    def basis(cls, w: Permutation, coeff=ONE) -> "HeckeElement":
        return cls(w.kind, w.rank, {w: coeff})

    @classmethod
    def one(cls, kind: str, rank: int) -> "HeckeElement":
        return cls.basis(identity(kind, rank))

    @classmethod
    def zero(cls, kind: str, rank: int) -> "HeckeElement":
        return cls(kind, rank)

    @classmethod
    def gen(cls, kind: str, rank: int, i: int) -> "HeckeElement":
        return cls.basis(generator(kind, rank, i))

    # -- inspection ------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, w: Permutation) -> LaurentPoly:
        return self.terms.get(w, ZERO)

    def support(self) -> list[Permutation]:
        return sorted(self.terms)

    def max_length(self) -> int:
        return max((length(w) for w in self.terms), default=0)

    def _check_same(self, other: "HeckeElement"):
        if self.kind != other.kind or self.rank != other.rank:
            raise ValueError(
                f"algebra mismatch: {self.kind} rank {self.rank} vs {other.kind} rank {other.rank}"
            )

    # -- linear structure ------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            return self + HeckeElement.one(self.kind, self.rank).scale(as_laurent(other))
        self._check_same(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            s = acc.get(w, ZERO) + c
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
        return HeckeElement._wrap(self.kind, self.rank, acc)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElement._wrap(self.kind, self.rank, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "HeckeElement":
        c = as_laurent(c)
        if not c:
            return HeckeElement.zero(self.kind, self.rank)
        return HeckeElement._wrap(self.kind, self.rank, {w: a * c for w, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, HeckeElement):
            return self.kind == other.kind and self.rank == other.rank and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.kind, self.rank, frozenset(self.terms.items())))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("use inverse_basis/invert_generator for inverses")
        out = HeckeElement.one(self.kind, self.rank)
        for _ in range(n):
            out = out * self
        return out

    # -- evaluation ------------------------------------------------------

    def evaluate(self, v) -> dict[Permutation, complex]:
        """Specialize the coefficients at a numeric ``v``."""
        return {w: c(v) for w, c in self.terms.items()}

    def __repr__(self):
        return f"HeckeElement({str(self)!r})"

    def __str__(self):
        return format_hecke(self)


# -- multiplication ------------------------------------------------------------


def _left_gen_terms(i: int, terms: dict, kind: str, rank: int) -> dict:
    """``T_{s_i} * sum c_w T_w`` as a fresh term dict."""
    out: dict = {}

    def add(w, c):
        s = out.get(w)
        s = c if s is None else s + c
        if s:
            out[w] = s
        else:
            out.pop(w, None)

    for w, c in terms.items():
        sw = w.left_mul_gen(i)
        if w.has_left_descent(i):
            add(w, c * QUAD_LINEAR)
            add(sw, c * Q)
        else:
            add(sw, c)
    return out


def mul_gen_basis(i: int, w: Permutation) -> HeckeElement:
    """``T_{s_i} T_w``: ``T_{s_i w}`` when the length goes up, otherwise
    ``(v^-2 - 1) T_w + v^-2 T_{s_i w}``."""
    return HeckeElement._wrap(w.kind, w.rank, _left_gen_terms(i, {w: ONE}, w.kind, w.rank))


def _check_cutoff(terms: dict, cutoff: int | None):
    if cutoff is None:
        return
    for w in terms:
        if length(w) > cutoff:
            raise CutoffExceeded(f"product term {w} has length {length(w)} > cutoff {cutoff}")


def left_mul_basis(sigma: Permutation, x: HeckeElement, cutoff: int | None = None) -> HeckeElement:
    """``T_sigma * x`` by left-multiplying a reduced word of ``sigma``, last letter first."""
    letters, k = reduced_decomposition(sigma)
    terms = x.terms
    if k:
        terms = {w.rotate(k): c for w, c in terms.items()}
    for i in reversed(letters):
        terms = _left_gen_terms(i, terms, x.kind, x.rank)
        _check_cutoff(terms, cutoff)
    return HeckeElement._wrap(x.kind, x.rank, terms)


def mul(a: HeckeElement, b: HeckeElement, cutoff: int | None = None) -> HeckeElement:
    """Product in the Hecke algebra (bilinear extension of ``T_sigma T_w``)."""
    a._check_same(b)
    acc: dict = {}
    for sigma, c in a.terms.items():
        part = left_mul_basis(sigma, b, cutoff)
        for w, d in part.terms.items():
            s = acc.get(w, ZERO) + c * d
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
    return HeckeElement._wrap(a.kind, a.rank, acc)


def invert_generator(i: int, kind: str = FINITE, rank: int = 2) -> HeckeElement:
    """``T_{s_i}^-1 = v^2 T_{s_i} + (v^2 - 1) T_e``."""
    v2 = LaurentPoly.monomial(2)
    return HeckeElement(kind, rank, {generator(kind, rank, i): v2, identity(kind, rank): v2 - 1})


def inverse_basis(w: Permutation, cutoff: int | None = None) -> HeckeElement:
    """``T_w^-1`` as the reversed product of generator inverses (and ``T_{pi^-k}``)."""
    letters, k = reduced_decomposition(w)
    out = HeckeElement.one(w.kind, w.rank)
    for i in reversed(letters):
        out = mul(out, invert_generator(i, w.kind, w.rank), cutoff)
    if k:
        # T_w^-1 = T_{pi^-k} T_{s_l}^-1 ... T_{s_1}^-1, and T_{pi^-k} T_u = T_{pi^-k u}.
        out = HeckeElement._wrap(w.kind, w.rank, {u.rotate(-k): c for u, c in out.terms.items()})
    return out


# -- presentation checks -------------------------------------------------------


class PresentationReport:
    """Outcome of :func:`verify_presentation`."""

    def __init__(self, kind: str, rank: int, L: int):
        self.kind, self.rank, self.L = kind, rank, L
        self.counts = {"braid": 0, "commuting": 0, "quadratic": 0, "length_additive": 0}
        self.violations: list[dict] = []

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, family: str, ok: bool, **witness):
        self.counts[family] += 1
        if not ok:
            self.violations.append({"relation": family, **witness})

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "rank": self.rank,
            "L": self.L,
            "checked": dict(self.counts),
            "violations": self.violations,
            "pass": self.passed,
        }


def _braid_partner(kind: str, r: int, i: int, j: int) -> int:
    """Coxeter matrix entry m(i, j) for type A (finite) or affine A."""
    if i == j:
        return 1
    d = abs(i - j)
    if kind == AFFINE:
        d = min(d, r - d)
        if r == 2:
            return 0  # infinite dihedral: no braid relation
    return 3 if d == 1 else 2


def verify_presentation(kind: str, r: int, L: int) -> PresentationReport:
    """Check braid, quadratic and length-additivity relations exactly.

    Length additivity is tested as ``T_x T_y = T_{xy}`` for every pair of
    elements of length ``<= L`` with ``l(xy) = l(x) + l(y)``; braid and
    quadratic relations for all generator pairs.
    """
    rep = PresentationReport(kind, r, L)
    e = identity(kind, r)
    gens = list(e.generator_indices)
    one = HeckeElement.one(kind, r)
    for i in gens:
        t = HeckeElement.gen(kind, r, i)
        lhs = mul(t + one, t - one.scale(Q))
        rep.record("quadratic", not lhs, generator=i, residual=str(lhs))
    for i in gens:
        for j in gens:
            if j <= i:
                continue
            m = _braid_partner(kind, r, i, j)
            if m == 0:
                continue
            ti, tj = HeckeElement.gen(kind, r, i), HeckeElement.gen(kind, r, j)
            if m == 2:
                lhs, rhs, fam = mul(ti, tj), mul(tj, ti), "commuting"
            else:
                lhs, rhs, fam = mul(mul(ti, tj), ti), mul(mul(tj, ti), tj), "braid"
            rep.record(fam, lhs == rhs, generators=[i, j], residual=str(lhs - rhs))
    elements = list(iter_group(kind, r, L))
    by_len = {w: length(w) for w in elements}
    for x in elements:
        tx = HeckeElement.basis(x)
        for y in elements:
            if by_len[x] + by_len[y] > L:
                continue
            xy = x * y
            if length(xy) != by_len[x] + by_len[y]:
                continue
            prod = mul(tx, HeckeElement.basis(y))
            ok = prod == HeckeElement.basis(xy)
            rep.record("length_additive", ok, x=str(x), y=str(y), residual=str(prod - HeckeElement.basis(xy)))
    return rep


# -- text format ---------------------------------------------------------------


def format_hecke(x: HeckeElement) -> str:
    if not x.terms:
        return "0"
    parts = []
    for w in sorted(x.terms, key=lambda u: (-length(u), u.window)):
        c = x.terms[w]
        letters, k = reduced_decomposition(w)
        basis = f"T[{format_word(letters, k)}]"
        if c == ONE:
            body, neg = basis, False
        elif c == -ONE:
            body, neg = basis, True
        elif c.is_monomial():
            (e, a), = c.items()
            neg = a < 0
            body = f"{LaurentPoly({e: abs(a)})}*{basis}"
        else:
            body, neg = f"({c})*{basis}", False
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


_HTERM = re.compile(r"\s*([+-])?\s*(?:(\([^()]*\)|[^()\[\]]+?)\s*\*\s*)?T\[([^\]]*)\]\s*")


def parse_hecke(text: str, kind: str, rank: int) -> HeckeElement:
    """Parse ``"(v^-2 - 1)*T[s1] + v^-2*T[]"``."""
    acc = HeckeElement.zero(kind, rank)
    pos, s = 0, text.strip()
    if s == "0":
        return acc
    while pos < len(s):
        m = _HTERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse Hecke element {text!r} at offset {pos}")
        sign, coef, word = m.groups()
        c = parse_laurent(coef) if coef else ONE
        if sign == "-":
            c = -c
        letters, k = parse_word(word)
        acc = acc + HeckeElement.basis(from_word(kind, rank, letters, k), c)
        pos = m.end()
    return acc
