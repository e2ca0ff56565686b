"""v-Schur algebras, the tensor space and Schur-Weyl duality at desk scale.

The Schur algebra is realized as ``S(n, r) = (+)_{i,j} e_i H e_j`` with
``e_i`` the (unnormalized) symmetrizer of the stabilizer ``S_i`` of a weakly
increasing index ``i``.  Note ``e_i^2 = P_i(v) e_i`` with ``P_i`` the
Poincare polynomial of ``S_i`` in ``q = v^-2``; ``e_i`` is a projector only
up to that scalar, so block membership is tested as ``e_i x = P_i x`` and
``x e_j = P_j x``.

The left action on ``T(n, r) = (+)_k e_k H`` is the one of homomorphisms
``e_j H -> e_i H``: writing ``x = h0 e_j`` (``h0`` supported on minimal left
coset representatives of ``S_j``), ``x . (e_k h) = delta_jk h0 e_k h``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, groupby
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import _linalg
from .coxeter import AFFINE, FINITE, Permutation, bfs_lengths, length
from .hecke import HeckeElement, mul
from .laurent import ONE, ZERO, LaurentPoly, V
from .specht import q_to_v, young_subgroup

__all__ = [
    "WeakIndex",
    "enumerate_index",
    "stabilizer_composition",
    "projector",
    "poincare",
    "SchurElement",
    "schur_basis",
    "schur_dimension_formula",
    "TensorSpace",
    "tensor_space",
    "duality_check",
    "DualityReport",
    "doty_giaquinto_operators",
    "doty_giaquinto_check",
]

WeakIndex = tuple


def enumerate_index(n: int, r: int) -> list[tuple[int, ...]]:
    """Weakly increasing ``(i_1 <= ... <= i_r)`` with entries in ``1..n``, lexicographic."""
    if n < 1 or r < 1:
        raise ValueError("n and r must be positive")
    return list(combinations_with_replacement(range(1, n + 1), r))


def stabilizer_composition(i: Sequence[int]) -> tuple[int, ...]:
    if any(a > b for a, b in zip(i, i[1:])):
        raise ValueError(f"index {tuple(i)} is not weakly increasing")
    return tuple(len(list(g)) for _, g in groupby(i))


def _stabilizer_gens(i: Sequence[int]) -> list[int]:
    return [k for k in range(1, len(i)) if i[k - 1] == i[k]]


def projector(i: Sequence[int]) -> HeckeElement:
    """``e_i = sum_{d in S_i} T_d``."""
    comp = stabilizer_composition(i)
    return HeckeElement(FINITE, len(i), {w: ONE for w in young_subgroup(comp)})


def poincare(i: Sequence[int]) -> LaurentPoly:
    """``sum_{d in S_i} q^l(d)`` with ``q = v^-2``."""
    out = ZERO
    for w in young_subgroup(stabilizer_composition(i)):
        out = out + LaurentPoly.monomial(-2 * length(w))
    return out


def _all_perms(r: int) -> list[Permutation]:
    return sorted(bfs_lengths(FINITE, r, r * (r - 1) // 2))


def _is_min_left(w: Permutation, gens: Iterable[int]) -> bool:
    """``w`` minimal in ``S w`` (no left descents among ``gens``)."""
    return not any(w.has_left_descent(k) for k in gens)


def _is_min_right(w: Permutation, gens: Iterable[int]) -> bool:
    """``w`` minimal in ``w S`` (no right descents among ``gens``)."""
    return not any(w.has_right_descent(k) for k in gens)


@dataclass
class SchurElement:
    """Element of ``S(n, r)``: a map from index pairs to block elements."""

    n: int
    r: int
    blocks: dict = field(default_factory=dict)

    def __post_init__(self):
        self.blocks = {k: b for k, b in self.blocks.items() if b}

    def check_blocks(self) -> bool:
        for (i, j), x in self.blocks.items():
            if projector(i) * x != x.scale(poincare(i)):
                return False
            if x * projector(j) != x.scale(poincare(j)):
                return False
        return True

    def act_on(self, vector: dict) -> dict:
        """Left action on an element of ``T(n, r)`` given as ``{k: element of e_k H}``."""
        out: dict = {}
        for (i, j), x in self.blocks.items():
            t = vector.get(j)
            if t is None or not t:
                continue
            y = _left_factor(x, j) * t
            out[i] = out[i] + y if i in out else y
        return {k: y for k, y in out.items() if y}

    def __mul__(self, other: "SchurElement") -> "SchurElement":
        """Composition as endomorphisms of ``T(n, r)``."""
        out: dict = {}
        for (i, j), x in self.blocks.items():
            for (j2, k), y in other.blocks.items():
                if j != j2:
                    continue
                z = _left_factor(x, j) * y
                out[(i, k)] = out[(i, k)] + z if (i, k) in out else z
        return SchurElement(self.n, self.r, out)

    def __add__(self, other: "SchurElement") -> "SchurElement":
        out = dict(self.blocks)
        for key, y in other.blocks.items():
            out[key] = out[key] + y if key in out else y
        return SchurElement(self.n, self.r, out)

    def __eq__(self, other):
        return isinstance(other, SchurElement) and self.blocks == other.blocks


def _left_factor(x: HeckeElement, j: Sequence[int]) -> HeckeElement:
    """``h0`` with ``x = h0 e_j``, for ``x`` right-invariant under ``S_j``."""
    gens = _stabilizer_gens(j)
    return HeckeElement(x.kind, x.rank, {w: c for w, c in x.terms.items() if _is_min_right(w, gens)})


def double_cosets(i: Sequence[int], j: Sequence[int]) -> list[list[Permutation]]:
    """The double cosets ``S_i \\ S_r / S_j``, each as a sorted element list (minimal first)."""
    r = len(i)
    left = young_subgroup(stabilizer_composition(i))
    right = young_subgroup(stabilizer_composition(j))
    seen: set = set()
    out = []
    for w in _all_perms(r):
        if w in seen:
            continue
        coset = sorted({a * w * b for a in left for b in right})
        seen.update(coset)
        out.append(coset)
    return out


def schur_basis(n: int, r: int) -> list[tuple[tuple, tuple, SchurElement]]:
    """One coset-sum element per ``(i, j, S_i d S_j)``, in block ``(i, j)``."""
    out = []
    idx = enumerate_index(n, r)
    for i in idx:
        for j in idx:
            for coset in double_cosets(i, j):
                x = HeckeElement(FINITE, r, {w: ONE for w in coset})
                out.append((i, j, SchurElement(n, r, {(i, j): x})))
    return out


def schur_dimension_formula(n: int, r: int) -> int:
    return comb(n * n + r - 1, r)


# -- tensor space ----------------------------------------------------------------


class TensorSpace:
    """``T(n, r)`` with basis ``e_i T_d`` (``d`` minimal in ``S_i d``)."""

    def __init__(self, n: int, r: int):
        self.n, self.r = n, r
        self.indices = enumerate_index(n, r)
        self.basis: list[tuple[tuple, Permutation]] = []
        for i in self.indices:
            gens = _stabilizer_gens(i)
            for d in _all_perms(r):
                if _is_min_left(d, gens):
                    self.basis.append((i, d))
        self.position = {key: k for k, key in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def element(self, k: int) -> HeckeElement:
        i, d = self.basis[k]
        return projector(i) * HeckeElement.basis(d)

    def coordinates(self, i: tuple, y: HeckeElement) -> dict[int, LaurentPoly]:
        """Coordinates of ``y`` in ``e_i H`` (coefficient of each minimal ``T_d``)."""
        out = {}
        for w, c in y.terms.items():
            k = self.position.get((i, w))
            if k is not None:
                out[k] = c
        return out

    def right_action(self, h: HeckeElement) -> list[dict[int, LaurentPoly]]:
        """Exact matrix of ``t -> t h`` as sparse columns."""
        cols = []
        for k, (i, _) in enumerate(self.basis):
            cols.append(self.coordinates(i, self.element(k) * h))
        return cols

    def left_action(self, x: SchurElement) -> list[dict[int, LaurentPoly]]:
        cols = []
        for k, (i, _) in enumerate(self.basis):
            image = x.act_on({i: self.element(k)})
            col: dict = {}
            for i2, y in image.items():
                col.update(self.coordinates(i2, y))
            cols.append(col)
        return cols

    def to_numeric(self, cols: list[dict[int, LaurentPoly]], v: complex) -> np.ndarray:
        m = np.zeros((self.dim, self.dim), dtype=complex)
        for k, col in enumerate(cols):
            for row, c in col.items():
                m[row, k] = c(v)
        return m


def tensor_space(n: int, r: int) -> TensorSpace:
    return TensorSpace(n, r)


@dataclass
class DualityReport:
    n: int
    r: int
    q: complex
    dim_endH: int
    dim_S: int
    dim_formula: int
    dim_endS: int | None = None
    dim_H_image: int | None = None
    mode: str = "finite"
    conclusive: bool = True

    @property
    def match(self) -> bool:
        ok = self.dim_endH == self.dim_S == self.dim_formula
        if self.dim_endS is not None:
            ok = ok and self.dim_endS == self.dim_H_image
        return ok

    def as_dict(self) -> dict:
        q = complex(self.q)
        return {
            "n": self.n,
            "r": self.r,
            "q": q.real if q.imag == 0 else [q.real, q.imag],
            "dim_endH": self.dim_endH,
            "dim_S": self.dim_S,
            "dim_formula": self.dim_formula,
            "dim_endS": self.dim_endS,
            "dim_H_image": self.dim_H_image,
            "match": self.match,
            "mode": self.mode,
            "conclusive": self.conclusive,
            "label": "finite-type instance of Schur-Weyl duality"
            if self.mode == "finite"
            else "length-truncated affine instance (non-conclusive)",
        }


def duality_check(n: int, r: int, q: complex = 3.0, mode: str = "finite", cutoff: int = 4) -> DualityReport:
    """Compare ``dim End_H(T(n, r))`` with the Schur-algebra basis count.

    The commutant of the right ``H``-action is the null space of
    ``X -> [X rho(T_k) - rho(T_k) X]_k``; its dimension is read off the SVD
    with relative threshold ``1e-9``.  The reverse commutant
    ``End_S(T)`` is compared with the span of the image of ``H``.
    """
    if mode == "affine":
        return _affine_duality(n, r, q, cutoff)
    if mode != "finite":
        raise ValueError(f"unknown mode {mode!r}")
    v = q_to_v(q)
    ts = TensorSpace(n, r)
    gens = [ts.to_numeric(ts.right_action(HeckeElement.gen(FINITE, r, k)), v) for k in range(1, r)]
    if gens:
        dim_endH = _linalg.commutant_dimension(gens)
    else:
        dim_endH = ts.dim**2
    basis = schur_basis(n, r)
    lefts = [ts.to_numeric(ts.left_action(x), v) for _, _, x in basis]
    dim_endS = _linalg.commutant_dimension(lefts)
    images = [ts.to_numeric(ts.right_action(HeckeElement.basis(w)), v).reshape(-1) for w in _all_perms(r)]
    dim_h_image = _linalg.numerical_rank(np.array(images))
    return DualityReport(
        n, r, q, dim_endH, len(basis), schur_dimension_formula(n, r), dim_endS, dim_h_image
    )


def _affine_duality(n: int, r: int, q: complex, cutoff: int) -> DualityReport:
    """Truncated affine variant; the truncation breaks the module structure, so never conclusive."""
    v = q_to_v(q)
    elements = [w for w in bfs_lengths(AFFINE, r, cutoff)]
    idx = enumerate_index(n, r)
    basis = []
    for i in idx:
        gens = _stabilizer_gens(i)
        basis.extend((i, d) for d in sorted(elements) if _is_min_left(d, gens))
    pos = {key: k for k, key in enumerate(basis)}
    dim = len(basis)
    mats = []
    for k in range(r):
        m = np.zeros((dim, dim), dtype=complex)
        t = HeckeElement.gen(AFFINE, r, k)
        for col, (i, d) in enumerate(basis):
            e = HeckeElement(AFFINE, r, {w: ONE for w in _affine_young(i)})
            y = mul(mul(e, HeckeElement.basis(d)), t)
            for w, c in y.terms.items():
                row = pos.get((i, w))
                if row is not None:
                    m[row, col] = c(v)
        mats.append(m)
    dim_endH = _linalg.commutant_dimension(mats)
    dim_S = sum(len(double_cosets(i, j)) for i in idx for j in idx)
    return DualityReport(n, r, q, dim_endH, dim_S, schur_dimension_formula(n, r), mode="affine", conclusive=False)


def _affine_young(i: Sequence[int]) -> list[Permutation]:
    from .coxeter import AffinePermutation

    return [AffinePermutation(w.window) for w in young_subgroup(stabilizer_composition(i))]


# -- Doty-Giaquinto presentation of S(2, d) ------------------------------------------


class _SparseMatrix:
    """Square sparse matrix over any commutative ring with ``+``, ``*`` and truthiness."""

    def __init__(self, size: int, entries: dict | None = None):
        self.size = size
        self.entries = {k: c for k, c in (entries or {}).items() if c}

    @classmethod
    def identity(cls, size: int, one=ONE):
        return cls(size, {(k, k): one for k in range(size)})

    def __add__(self, other):
        out = dict(self.entries)
        for k, c in other.entries.items():
            out[k] = out[k] + c if k in out else c
        return _SparseMatrix(self.size, out)

    def __neg__(self):
        return _SparseMatrix(self.size, {k: -c for k, c in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return _SparseMatrix(self.size, {k: a * c for k, a in self.entries.items()})

    def __matmul__(self, other):
        rows: dict = {}
        for (i, j), a in self.entries.items():
            rows.setdefault(j, []).append((i, a))
        out: dict = {}
        for (j, k), b in other.entries.items():
            for i, a in rows.get(j, ()):
                key = (i, k)
                out[key] = out[key] + a * b if key in out else a * b
        return _SparseMatrix(self.size, out)

    def kron(self, other):
        out = {}
        for (i, j), a in self.entries.items():
            for (k, l), b in other.entries.items():
                out[(i * other.size + k, j * other.size + l)] = a * b
        return _SparseMatrix(self.size * other.size, out)

    def is_zero(self) -> bool:
        return not self.entries

    def to_numpy(self, v: complex) -> np.ndarray:
        m = np.zeros((self.size, self.size), dtype=complex)
        for (i, j), c in self.entries.items():
            m[i, j] = c(v)
        return m


def _kron_all(factors):
    out = factors[0]
    for f in factors[1:]:
        out = out.kron(f)
    return out


def doty_giaquinto_operators(d: int) -> dict[str, _SparseMatrix]:
    """``E, F, K, K^-1`` on the d-fold tensor power of the standard module.

    Coproduct: ``E -> E (x) K + 1 (x) E``, ``F -> F (x) 1 + K^-1 (x) F``,
    ``K -> K (x) K``, iterated; entries are exact Laurent polynomials.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    vinv = LaurentPoly.monomial(-1)
    E = _SparseMatrix(2, {(0, 1): ONE})
    F = _SparseMatrix(2, {(1, 0): ONE})
    K = _SparseMatrix(2, {(0, 0): V, (1, 1): vinv})
    Ki = _SparseMatrix(2, {(0, 0): vinv, (1, 1): V})
    I = _SparseMatrix.identity(2)
    E_d = F_d = None
    for p in range(d):
        e_term = _kron_all([I] * p + [E] + [K] * (d - p - 1))
        f_term = _kron_all([Ki] * p + [F] + [I] * (d - p - 1))
        E_d = e_term if E_d is None else E_d + e_term
        F_d = f_term if F_d is None else F_d + f_term
    return {"E": E_d, "F": F_d, "K": _kron_all([K] * d), "Kinv": _kron_all([Ki] * d)}


COPRODUCT_CONVENTION = "E->E(x)K+1(x)E, F->F(x)1+K^-1(x)F, K->K(x)K"


def doty_giaquinto_check(d: int, v: complex | None = None) -> dict[str, dict]:
    """Verify relations (a)-(d) of the ``S(2, d)`` presentation.

    With ``v=None`` the check is exact in Laurent arithmetic (relation (c)
    is cleared of its denominator by exact division).  With a numeric ``v``
    each residual is ``||lhs - rhs||_F`` divided by the Frobenius norms of
    the terms that were combined, so it measures cancellation error.
    """
    ops = doty_giaquinto_operators(d)
    E, F, K, Ki = ops["E"], ops["F"], ops["K"], ops["Kinv"]
    size = 2**d
    I = _SparseMatrix.identity(size)
    weights = list(range(d, -d - 1, -2))
    if v is None:
        out = {}
        out["a"] = {"pass": (K @ Ki - I).is_zero() and (Ki @ K - I).is_zero()}
        vv = LaurentPoly.monomial(2)
        b1 = K @ E @ Ki - E.scale(vv)
        b2 = K @ F @ Ki - F.scale(vv.inverse())
        out["b"] = {"pass": b1.is_zero() and b2.is_zero()}
        denom = V - LaurentPoly.monomial(-1)
        diff = K - Ki
        try:
            quot = _SparseMatrix(size, {k: c.divexact(denom) for k, c in diff.entries.items()})
            ok = (E @ F - F @ E - quot).is_zero()
        except ValueError:
            ok = False
        out["c"] = {"pass": ok}
        prod = I
        for k in weights:
            prod = prod @ (K - I.scale(LaurentPoly.monomial(k)))
        out["d"] = {"pass": prod.is_zero()}
        for key in out:
            out[key].update({"mode": "exact", "residual": 0.0 if out[key]["pass"] else None})
        return out

    v = complex(v)
    En, Fn, Kn, Kin = (m.to_numpy(v) for m in (E, F, K, Ki))
    In = np.eye(size)

    def rel(lhs_terms, rhs_terms):
        lhs = sum(lhs_terms)
        rhs = sum(rhs_terms) if rhs_terms else 0 * In
        scale = sum(np.linalg.norm(t) for t in lhs_terms) + sum(np.linalg.norm(t) for t in rhs_terms)
        return float(np.linalg.norm(lhs - rhs) / scale) if scale else 0.0

    res = {}
    res["a"] = max(rel([Kn @ Kin], [In]), rel([Kin @ Kn], [In]))
    res["b"] = max(rel([Kn @ En @ Kin], [v**2 * En]), rel([Kn @ Fn @ Kin], [v**-2 * Fn]))
    res["c"] = rel([En @ Fn, -Fn @ En], [(Kn - Kin) / (v - 1 / v)])
    prod = In.astype(complex)
    norms = 1.0
    for k in weights:
        factor = Kn - v**k * In
        prod = prod @ factor
        norms *= np.linalg.norm(factor, 2)
    res["d"] = float(np.linalg.norm(prod) / (norms * np.sqrt(size)))
    return {k: {"mode": "numeric", "residual": r, "pass": r < 1e-12} for k, r in res.items()}
