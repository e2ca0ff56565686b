"""Dipper-James modules for the finite Hecke algebra H(q, S_n).

Everything lives inside the Hecke algebra of ``S_n`` with the quadratic
relation ``(T + 1)(T - q) = 0`` where ``q = v^-2``.  Numerical work happens
in the n!-dimensional regular representation specialized at a complex ``q``.

* ``M^lam = H Sym_lam`` is the permutation module, with basis
  ``T_d Sym_lam`` for the minimal left coset representatives ``d`` of
  ``Y_lam`` and the bilinear form ``<T_d Sym, T_e Sym> = delta_de q^l(d)``.
* ``S^lam`` is the left ideal ``H A_lam' H Sym_lam``.  Over a semisimple
  specialization it equals ``H z_lam`` for the single element
  ``z_lam = A_lam' T_w Sym_lam``, where ``w`` is the minimal element of the
  unique double coset ``Y_lam' w Y_lam`` with trivial intersection
  ``w^-1 Y_lam' w  cap  Y_lam``.  ``H z_lam`` is the lattice form of the
  module and is what :func:`d_dimension` uses at roots of unity.
* ``D^lam = S^lam / (S^lam cap S^lam-perp)``; its dimension is the rank of
  the Gram matrix of a basis of ``S^lam``.
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

import numpy as np

from . import _linalg
from .coxeter import FinitePermutation, bfs_lengths, identity, length
from .hecke import HeckeElement
from .laurent import LaurentPoly

__all__ = [
    "Partition",
    "partitions",
    "young_subgroup",
    "symmetrizer",
    "antisymmetrizer",
    "RegularRepresentation",
    "specht_dimension",
    "specht_basis",
    "gram_matrix",
    "d_dimension",
    "is_l_regular",
    "standard_tableaux_count",
    "hook_length_count",
    "q_to_v",
    "root_of_unity",
    "GENERIC_Q",
]

FINITE = "finite"
GENERIC_Q = 3.0


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Sequence[int]):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("the empty partition is not supported")
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        return Partition(tuple(sum(1 for p in self if p > j) for j in range(self[0])))

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"


def partitions(n: int) -> list[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""

    def gen(m: int, cap: int) -> Iterator[tuple[int, ...]]:
        if m == 0:
            yield ()
            return
        for p in range(min(m, cap), 0, -1):
            for rest in gen(m - p, p):
                yield (p,) + rest

    if n < 1:
        raise ValueError("n must be positive")
    return [Partition(p) for p in gen(n, n)]


def _block_generators(composition: Sequence[int]) -> list[int]:
    gens, start = [], 1
    for part in composition:
        gens.extend(range(start, start + part - 1))
        start += part
    return gens


def young_subgroup(composition: Sequence[int]) -> list[FinitePermutation]:
    """Elements of ``S_lam1 x S_lam2 x ...`` acting on consecutive blocks."""
    n = sum(composition)
    gens = _block_generators(composition)
    e = identity(FINITE, n)
    seen, frontier = {e}, [e]
    while frontier:
        nxt = []
        for w in frontier:
            for i in gens:
                u = w.right_mul_gen(i)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(seen)


def symmetrizer(composition: Sequence[int]) -> HeckeElement:
    n = sum(composition)
    return HeckeElement(FINITE, n, {w: 1 for w in young_subgroup(composition)})


def antisymmetrizer(composition: Sequence[int]) -> HeckeElement:
    """``sum_{w in Y} (-q)^(n(n-1)/2 - l(w)) T_w`` with ``q = v^-2`` (exact)."""
    n = sum(composition)
    top = n * (n - 1) // 2
    terms = {}
    for w in young_subgroup(composition):
        e = top - length(w)
        terms[w] = LaurentPoly.monomial(-2 * e, (-1) ** e)
    return HeckeElement(FINITE, n, terms)


def is_l_regular(lam: Sequence[int], l: int) -> bool:
    """No part value repeats ``l`` or more times."""
    if l < 2:
        raise ValueError("l must be >= 2")
    lam = Partition(lam)
    return all(lam.count(p) < l for p in set(lam))


def q_to_v(q: complex) -> complex:
    """The principal ``v`` with ``v^-2 = q``."""
    q = complex(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    return 1 / cmath.sqrt(q)


def root_of_unity(l: int) -> complex:
    return cmath.exp(2j * cmath.pi / l)


# -- regular representation --------------------------------------------------


class RegularRepresentation:
    """Left and right regular matrices of ``H(q, S_n)`` at a numeric ``q``."""

    def __init__(self, n: int, q: complex):
        self.n, self.q = n, complex(q)
        self.v = q_to_v(q)
        self.elements = sorted(bfs_lengths(FINITE, n, n * (n - 1) // 2))
        self.index = {w: k for k, w in enumerate(self.elements)}
        self.lengths = np.array([length(w) for w in self.elements])
        N = len(self.elements)
        q = self.q
        self.left_gens, self.right_gens = {}, {}
        for i in range(1, n):
            L = np.zeros((N, N), dtype=complex)
            R = np.zeros((N, N), dtype=complex)
            for k, w in enumerate(self.elements):
                sw, ws = w.left_mul_gen(i), w.right_mul_gen(i)
                if w.has_left_descent(i):
                    L[k, k] += q - 1
                    L[self.index[sw], k] += q
                else:
                    L[self.index[sw], k] += 1
                if w.has_right_descent(i):
                    R[k, k] += q - 1
                    R[self.index[ws], k] += q
                else:
                    R[self.index[ws], k] += 1
            self.left_gens[i], self.right_gens[i] = L, R
        self._left_basis: dict = {}
        self._right_basis: dict = {}

    @property
    def dim(self) -> int:
        return len(self.elements)

    def vector(self, h: HeckeElement) -> np.ndarray:
        x = np.zeros(self.dim, dtype=complex)
        for w, c in h.terms.items():
            x[self.index[w]] = c(self.v)
        return x

    def _word_matrix(self, w: FinitePermutation, gens: dict, cache: dict, left: bool) -> np.ndarray:
        if w in cache:
            return cache[w]
        if w.is_identity():
            m = np.eye(self.dim, dtype=complex)
        else:
            i = next(j for j in range(1, self.n) if w.has_left_descent(j))
            u = w.left_mul_gen(i)  # w = s_i u with l(w) = l(u) + 1
            if left:
                m = gens[i] @ self._word_matrix(u, gens, cache, left)
            else:
                m = self._word_matrix(u, gens, cache, left) @ gens[i]
        cache[w] = m
        return m

    def left_matrix(self, h: HeckeElement) -> np.ndarray:
        """Matrix of ``x -> h x``."""
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for w, c in h.terms.items():
            out += c(self.v) * self._word_matrix(w, self.left_gens, self._left_basis, True)
        return out

    def right_matrix(self, h: HeckeElement) -> np.ndarray:
        """Matrix of ``x -> x h``."""
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for w, c in h.terms.items():
            out += c(self.v) * self._word_matrix(w, self.right_gens, self._right_basis, False)
        return out

    def left_ideal(self, seeds: np.ndarray, rtol: float = _linalg.RANK_RTOL) -> np.ndarray:
        """Orthonormal basis of ``H * span(seeds)``, closed under the left generators."""
        basis = _linalg.column_basis(seeds, rtol)
        while True:
            grown = np.hstack([basis] + [self.left_gens[i] @ basis for i in range(1, self.n)])
            new = _linalg.column_basis(grown, rtol)
            if new.shape[1] == basis.shape[1]:
                return basis
            basis = new


@lru_cache(maxsize=64)
def _regular(n: int, q: complex) -> RegularRepresentation:
    return RegularRepresentation(n, q)


def _distinguished_pair(lam: Partition) -> FinitePermutation:
    """Minimal ``w`` with ``w^-1 Y_lam' w  cap  Y_lam = {e}``."""
    n = lam.n
    rows = young_subgroup(lam.conjugate())
    cols = set(young_subgroup(lam))
    for w in sorted(bfs_lengths(FINITE, n, n * (n - 1) // 2)):
        winv = w.inverse()
        if all(y.is_identity() or (winv * y * w) not in cols for y in rows):
            return w
    raise AssertionError("no trivial-intersection double coset found")  # pragma: no cover


def specht_generator(lam: Sequence[int]) -> HeckeElement:
    """``z_lam = A_lam' T_w Sym_lam`` generating ``S^lam`` as a left ideal."""
    lam = Partition(lam)
    w = _distinguished_pair(lam)
    return antisymmetrizer(lam.conjugate()) * HeckeElement.basis(w) * symmetrizer(lam)


def specht_dimension(lam: Sequence[int], q: complex = GENERIC_Q) -> int:
    """``dim (H A_lam' H Sym_lam)`` at the numeric parameter ``q``."""
    lam = Partition(lam)
    reg = _regular(lam.n, complex(q))
    a = reg.left_matrix(antisymmetrizer(lam.conjugate()))
    s = reg.right_matrix(symmetrizer(lam))
    seeds = a @ s  # columns: A T_w Sym for every w
    return reg.left_ideal(seeds).shape[1]


def specht_basis(lam: Sequence[int], q: complex) -> tuple[RegularRepresentation, np.ndarray]:
    """Basis (columns, regular coordinates) of ``H z_lam`` at ``q``."""
    lam = Partition(lam)
    reg = _regular(lam.n, complex(q))
    z = reg.vector(specht_generator(lam))
    return reg, reg.left_ideal(z[:, None])


def coset_representatives(lam: Sequence[int]) -> list[FinitePermutation]:
    """Minimal-length representatives ``d`` of the left cosets ``d Y_lam``."""
    n = sum(lam)
    gens = _block_generators(lam)
    return [w for w in sorted(bfs_lengths(FINITE, n, n * (n - 1) // 2)) if not any(w.has_right_descent(i) for i in gens)]


def permutation_form(lam: Sequence[int], reg: RegularRepresentation) -> tuple[list[int], np.ndarray]:
    """Coordinate positions of ``T_d`` and the diagonal weights ``q^l(d)``."""
    reps = coset_representatives(lam)
    pos = [reg.index[d] for d in reps]
    weights = np.array([reg.q ** length(d) for d in reps])
    return pos, weights


def form_on(lam: Sequence[int], reg: RegularRepresentation, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Bilinear form on ``M^lam`` between the columns of ``x`` and ``y``."""
    pos, weights = permutation_form(lam, reg)
    return x[pos].T @ (weights[:, None] * y[pos])


def gram_matrix(lam: Sequence[int], q: complex) -> np.ndarray:
    reg, basis = specht_basis(lam, q)
    return form_on(lam, reg, basis, basis)


def _form_scale(lam: Sequence[int], reg: RegularRepresentation, basis: np.ndarray) -> float:
    # Size the form could have on this basis if it were nondegenerate.
    pos, weights = permutation_form(lam, reg)
    return float(np.max(np.abs(weights)) * np.linalg.norm(basis[pos], 2) ** 2)


def d_dimension(lam: Sequence[int], l: int, q: complex | None = None) -> int:
    """Rank of the Gram matrix of ``S^lam`` at a primitive ``l``-th root of unity.

    Singular values count as zero below ``1e-9`` times the scale of the
    form on the chosen basis, so a Gram matrix that vanishes identically
    has rank zero.
    """
    if l < 2:
        raise ValueError("l must be >= 2")
    q = root_of_unity(l) if q is None else q
    reg, basis = specht_basis(lam, q)
    gram = form_on(lam, reg, basis, basis)
    return _linalg.numerical_rank(gram, scale=_form_scale(lam, reg, basis))


# -- combinatorial oracles ----------------------------------------------------


def standard_tableaux_count(lam: Sequence[int]) -> int:
    """Count standard Young tableaux by removing corners recursively (brute force)."""

    @lru_cache(maxsize=None)
    def count(shape: tuple[int, ...]) -> int:
        if sum(shape) == 0:
            return 1
        total = 0
        for i, p in enumerate(shape):
            if p and (i + 1 == len(shape) or shape[i + 1] < p):
                total += count(shape[:i] + (p - 1,) + shape[i + 1 :])
        return total

    return count(tuple(Partition(lam)))


def hook_length_count(lam: Sequence[int]) -> int:
    lam = Partition(lam)
    conj = lam.conjugate()
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(lam.n) // prod
