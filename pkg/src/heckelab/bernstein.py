"""Bernstein presentation realized inside the Coxeter presentation.

The lattice element ``X^lam`` is ``(v^l(t) T_t)^-1`` for the translation
``t = t_lam`` when ``lam`` is dominant (weakly decreasing); a general weight
is split as ``lam = mu - nu`` with ``mu, nu`` dominant.  Translations use
the window ``(1 + r*lam_1, ..., r + r*lam_r)`` in the extended affine
symmetric group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Sequence

from .coxeter import AffinePermutation, length
from .hecke import CutoffExceeded, HeckeElement, Q, inverse_basis, invert_generator, mul
from .laurent import LaurentPoly

__all__ = [
    "translation",
    "t_tilde",
    "x_monomial",
    "dominant_split",
    "is_dominant",
    "BernsteinReport",
    "check_bernstein_relations",
    "check_lattice_homomorphism",
    "check_lattice_steps",
]

AFFINE = "affine"


def translation(lam: Sequence[int]) -> AffinePermutation:
    r = len(lam)
    return AffinePermutation(i + 1 + r * l for i, l in enumerate(lam))


def is_dominant(lam: Sequence[int]) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def t_tilde(w: AffinePermutation) -> HeckeElement:
    """``v^l(w) T_w``."""
    return HeckeElement.basis(w, LaurentPoly.monomial(length(w)))


def _t_tilde_inverse(w: AffinePermutation, cutoff: int | None) -> HeckeElement:
    return inverse_basis(w, cutoff).scale(LaurentPoly.monomial(-length(w)))


def dominant_split(lam: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Write ``lam = mu - nu`` with ``mu``, ``nu`` dominant and ``nu`` minimal.

    ``nu_i`` accumulates the ascents ``max(0, lam_{j+1} - lam_j)`` for ``j >= i``;
    ``nu = 0`` exactly when ``lam`` is already dominant.
    """
    r = len(lam)
    ascents = [max(0, lam[i + 1] - lam[i]) for i in range(r - 1)]
    nu = tuple(sum(ascents[i:]) for i in range(r))
    mu = tuple(l + n for l, n in zip(lam, nu))
    return mu, nu


def x_monomial(lam: Sequence[int], cutoff: int | None = None) -> HeckeElement:
    """``X_1^lam_1 ... X_r^lam_r`` in the Coxeter basis of the extended affine Hecke algebra."""
    lam = tuple(int(x) for x in lam)
    if len(lam) < 2:
        raise ValueError("weights need rank >= 2")
    mu, nu = dominant_split(lam)
    t_mu, t_nu = translation(mu), translation(nu)
    for t in (t_mu, t_nu):
        if cutoff is not None and length(t) > cutoff:
            raise CutoffExceeded(f"translation {t} has length {length(t)} > cutoff {cutoff}")
    x_mu = _t_tilde_inverse(t_mu, cutoff)
    if not any(nu):
        return x_mu
    # X^-nu = (X^nu)^-1 = v^l T_{t_nu}; no inverse needed.
    return mul(x_mu, t_tilde(t_nu), cutoff)


def unit_weight(r: int, j: int, sign: int = 1) -> tuple[int, ...]:
    return tuple(sign if k == j - 1 else 0 for k in range(r))


@dataclass
class BernsteinReport:
    relation: str
    indices: tuple
    left: HeckeElement
    right: HeckeElement
    equal: bool = field(init=False)
    note: str = ""

    def __post_init__(self):
        self.equal = self.left == self.right

    def as_dict(self) -> dict:
        d = {"relation": self.relation, "indices": list(self.indices), "pass": self.equal}
        if self.note:
            d["note"] = self.note
        if not self.equal:
            d["witness"] = str(self.left - self.right)
        return d


def check_bernstein_relations(r: int, cutoff: int = 8) -> list[BernsteinReport]:
    """Verify every Bernstein relation as an identity of Coxeter-basis elements.

    The braid relation is checked in its standard form
    ``T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}``.
    """
    if r < 2:
        raise ValueError("r must be >= 2")

    def m(a, b):
        return mul(a, b, cutoff)

    one = HeckeElement.one(AFFINE, r)
    T = {i: HeckeElement.gen(AFFINE, r, i) for i in range(1, r)}
    Tinv = {i: invert_generator(i, AFFINE, r) for i in range(1, r)}
    X = {j: x_monomial(unit_weight(r, j), cutoff) for j in range(1, r + 1)}
    Xinv = {j: x_monomial(unit_weight(r, j, -1), cutoff) for j in range(1, r + 1)}
    out: list[BernsteinReport] = []
    for i in range(1, r):
        out.append(BernsteinReport("T_i T_i^-1 = 1", (i,), m(T[i], Tinv[i]), one))
        out.append(BernsteinReport("T_i^-1 T_i = 1", (i,), m(Tinv[i], T[i]), one))
        out.append(BernsteinReport("(T_i + 1)(T_i - v^-2) = 0", (i,), m(T[i] + one, T[i] - one.scale(Q)), one.scale(0)))
    for i in range(1, r - 1):
        out.append(
            BernsteinReport(
                "T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}",
                (i,),
                m(m(T[i], T[i + 1]), T[i]),
                m(m(T[i + 1], T[i]), T[i + 1]),
                note="standard braid form",
            )
        )
    for i in range(1, r):
        for j in range(i + 2, r):
            out.append(BernsteinReport("T_i T_j = T_j T_i", (i, j), m(T[i], T[j]), m(T[j], T[i])))
    for j in range(1, r + 1):
        out.append(BernsteinReport("X_j X_j^-1 = 1", (j,), m(X[j], Xinv[j]), one))
        out.append(BernsteinReport("X_j^-1 X_j = 1", (j,), m(Xinv[j], X[j]), one))
    for a in range(1, r + 1):
        for b in range(a + 1, r + 1):
            out.append(BernsteinReport("X_i X_j = X_j X_i", (a, b), m(X[a], X[b]), m(X[b], X[a])))
    for i in range(1, r):
        out.append(BernsteinReport("T_i X_i T_i = v^-2 X_{i+1}", (i,), m(m(T[i], X[i]), T[i]), X[i + 1].scale(Q)))
        for j in range(1, r + 1):
            if j in (i, i + 1):
                continue
            out.append(BernsteinReport("X_j T_i = T_i X_j", (i, j), m(X[j], T[i]), m(T[i], X[j])))
    return out


def check_lattice_homomorphism(r: int, radius: int, cutoff: int | None = None) -> list[BernsteinReport]:
    """``X^lam X^mu = X^(lam + mu)`` and ``X^lam X^-lam = 1`` over the box ``|lam_i| <= radius``."""
    box = list(iproduct(range(-radius, radius + 1), repeat=r))
    cache = {lam: x_monomial(lam, cutoff) for lam in box}
    out = []
    one = HeckeElement.one(AFFINE, r)
    for lam in box:
        out.append(BernsteinReport("X^lam X^-lam = 1", lam, mul(cache[lam], cache[tuple(-x for x in lam)], cutoff), one))
        for mu in box:
            s = tuple(a + b for a, b in zip(lam, mu))
            if s not in cache:
                cache[s] = x_monomial(s, cutoff)
            out.append(BernsteinReport("X^lam X^mu = X^(lam+mu)", (lam, mu), mul(cache[lam], cache[mu], cutoff), cache[s]))
    return out


def check_lattice_steps(r: int, radius: int, cutoff: int | None = None) -> list[BernsteinReport]:
    """``X^lam X^(+-e_j) = X^(lam +- e_j)`` for every ``lam`` in the box.

    Cheaper than all pairs; by induction on ``|mu|`` it implies the full
    homomorphism on the box.
    """
    cache: dict = {}

    def x(lam):
        if lam not in cache:
            cache[lam] = x_monomial(lam, cutoff)
        return cache[lam]

    out = []
    for lam in iproduct(range(-radius, radius + 1), repeat=r):
        for j in range(1, r + 1):
            for sign in (1, -1):
                step = unit_weight(r, j, sign)
                target = tuple(a + b for a, b in zip(lam, step))
                out.append(BernsteinReport("X^lam X^(+-e_j) = X^(lam+-e_j)", (lam, step), mul(x(lam), x(step), cutoff), x(target)))
    return out
