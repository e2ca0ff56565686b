"""The quantized function algebra F_v(SL_2) and its unitary representations.

Generators ``t11, t12, t21, t22`` satisfy

    t11 t12 = v^-2 t12 t11    t11 t21 = v^-2 t21 t11
    t12 t22 = v^-2 t22 t12    t21 t22 = v^-2 t22 t21
    t12 t21 = t21 t12         t11 t22 - t22 t11 = (v^-2 - v^2) t12 t21

plus one unit relation, which depends on the relation mode:

* ``corrected``: the quantum determinant ``t11 t22 - v^-2 t12 t21 = 1``;
* ``paper-literal``: ``t11 t12 - v^-2 t12 t21 = 1``, which contradicts the
  other five and is kept only to diagnose it;
* ``bialgebra``: no unit relation (the matrix bialgebra M_v(2)).

Representations are truncated to ``span{e_0, ..., e_{N-1}}``; anything raised
past ``e_{N-1}`` is dropped, so residual checks skip the top band.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Mapping, Sequence

import numpy as np

from . import _linalg
from .coxeter import FINITE, from_word, length
from .laurent import ONE, LaurentPoly, as_laurent, format_laurent, parse_laurent

__all__ = [
    "GENERATORS",
    "MODES",
    "VARIANTS",
    "COPRODUCT_CONVENTION",
    "NCPoly",
    "RelationSet",
    "BudgetExceeded",
    "relation_set",
    "normal_form",
    "single_step_rewrites",
    "is_normal_word",
    "parse_ncpoly",
    "TruncatedRep",
    "rep_tau",
    "rep_pi",
    "solve_shift_coefficients",
    "ShiftSolution",
    "relation_residual",
    "ResidualReport",
    "induced_relations",
    "pi_si_generator",
    "tensor_rep",
    "direct_sum",
    "commutant_dim",
    "equivalence_check",
    "unit_circle",
]

A, B, C, D = "t11", "t12", "t21", "t22"
GENERATORS = (A, B, C, D)
_RANK = {g: k for k, g in enumerate(GENERATORS)}
MODES = ("corrected", "paper-literal", "bialgebra")
VARIANTS = ("corrected", "paper-literal")
COPRODUCT_CONVENTION = "Delta(t_ab) = sum_c t_ac (x) t_cb"

Word = tuple


def _mono(k: int, c=1) -> LaurentPoly:
    return LaurentPoly.monomial(k, c)


class BudgetExceeded(RuntimeError):
    """Rewriting did not terminate within the allotted number of steps."""


class NCPoly:
    """Element of the free algebra on ``t11, t12, t21, t22`` with Laurent coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, LaurentPoly] | None = None):
        clean: dict = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            for g in w:
                if g not in _RANK:
                    raise ValueError(f"unknown generator {g!r}")
            c = as_laurent(c)
            if c:
                clean[w] = clean[w] + c if w in clean else c
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def word(cls, *letters: str, coeff=ONE) -> "NCPoly":
        return cls({tuple(letters): coeff})

    @classmethod
    def one(cls) -> "NCPoly":
        return cls({(): ONE})

    @classmethod
    def zero(cls) -> "NCPoly":
        return cls()

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "NCPoly") -> "NCPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return NCPoly(out)

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "NCPoly":
        c = as_laurent(c)
        return NCPoly({w: a * c for w, a in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return self.scale(other)
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out[w] + c1 * c2 if w in out else c1 * c2
        return NCPoly(out)

    def __eq__(self, other):
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Word, LaurentPoly]]:
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), [_RANK[g] for g in kv[0]]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            word = "*".join(w)
            coef = format_laurent(c)
            neg = False
            if len(c.terms) == 1 and coef.startswith("-"):
                neg, coef = True, coef[1:]
            if len(c.terms) > 1:
                coef = f"({coef})"
            if not word:
                body = coef
            elif coef == "1":
                body = word
            else:
                body = f"{coef}*{word}"
            parts.append(("- " if neg else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    __repr__ = __str__


def _split_top(text: str, seps: str) -> list[tuple[str, str]]:
    """Split at top-level separators, keeping the separator in front of each piece."""
    out, depth, cur, lead = [], 0, [], ""
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in seps:
            prev = text[:k].rstrip()
            if ch in "+-" and (not prev or prev.endswith("^")):
                cur.append(ch)
                continue
            out.append((lead, "".join(cur)))
            lead, cur = ch, []
            continue
        cur.append(ch)
    out.append((lead, "".join(cur)))
    return out


_GEN_RE = re.compile(r"t[12][12]")


def parse_ncpoly(text: str) -> NCPoly:
    """Parse expressions such as ``"t22*t11 - (v^-2 - v^2)*t12*t21 + 1"``."""
    total = NCPoly.zero()
    for sign, term in _split_top(text, "+-"):
        term = term.strip()
        if not term:
            if sign:
                raise ValueError(f"empty term in {text!r}")
            continue
        coef, word = ONE, []
        for _, factor in _split_top(re.sub(r"(?<=[\w)])\s+(?=[\w(])", "*", term), "*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if _GEN_RE.fullmatch(factor):
                word.append(factor)
            else:
                coef = coef * parse_laurent(factor)
        if sign == "-":
            coef = -coef
        total = total + NCPoly({tuple(word): coef})
    return total


# -- rewriting -----------------------------------------------------------------

_QDIFF = _mono(-2) - _mono(2)  # v^-2 - v^2


def _ordering_rules() -> dict[Word, NCPoly]:
    return {
        (B, A): NCPoly.word(A, B, coeff=_mono(2)),
        (C, A): NCPoly.word(A, C, coeff=_mono(2)),
        (D, B): NCPoly.word(B, D, coeff=_mono(2)),
        (D, C): NCPoly.word(C, D, coeff=_mono(2)),
        (C, B): NCPoly.word(B, C),
        (D, A): NCPoly.word(A, D) - NCPoly.word(B, C, coeff=_QDIFF),
    }


@dataclass(frozen=True)
class RelationSet:
    """Rewrite rules plus the defining relations they come from.

    ``rules`` maps a two-letter word to its replacement.  In ``corrected``
    mode the quantum determinant is applied as the family
    ``t11 u t22 -> v^(-2|u|) (u + v^-2 t12 u t21)`` for ``u`` a word in
    ``t12, t21`` (``u`` empty gives ``t11 t22 -> 1 + v^-2 t12 t21``).
    """

    mode: str
    rules: dict = field(hash=False)
    relations: tuple = field(hash=False)
    determinant_family: bool = False

    def rule_list(self) -> list[tuple[str, str]]:
        out = [(" ".join(k), str(v)) for k, v in self.rules.items()]
        if self.determinant_family:
            out.append(("t11 u t22, u in {t12,t21}*", "v^(-2|u|) (u + v^-2 t12 u t21)"))
        return out


def relation_set(mode: str = "corrected") -> RelationSet:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    w = NCPoly.word
    rels = [
        ("q-comm t11 t12", w(A, B), w(B, A, coeff=_mono(-2))),
        ("q-comm t11 t21", w(A, C), w(C, A, coeff=_mono(-2))),
        ("q-comm t12 t22", w(B, D), w(D, B, coeff=_mono(-2))),
        ("q-comm t21 t22", w(C, D), w(D, C, coeff=_mono(-2))),
        ("comm t12 t21", w(B, C), w(C, B)),
        ("commutator t11 t22", w(A, D) - w(D, A), w(B, C, coeff=_QDIFF)),
    ]
    rules = _ordering_rules()
    family = False
    if mode == "corrected":
        rels.append(("determinant", w(A, D) - w(B, C, coeff=_mono(-2)), NCPoly.one()))
        family = True
    elif mode == "paper-literal":
        rels.append(("unit t11 t12 (literal)", w(A, B) - w(B, C, coeff=_mono(-2)), NCPoly.one()))
        rules[(A, B)] = NCPoly.one() + w(B, C, coeff=_mono(-2))
    return RelationSet(mode, rules, tuple(rels), family)


def _det_matches(word: Word) -> list[tuple[int, int]]:
    """Spans ``[i, j]`` with ``word[i] = t11``, ``word[j] = t22`` and only ``t12, t21`` between."""
    out = []
    for i, g in enumerate(word):
        if g != A:
            continue
        for j in range(i + 1, len(word)):
            if word[j] == D:
                out.append((i, j))
                break
            if word[j] not in (B, C):
                break
    return out


def _det_replacement(u: Word) -> NCPoly:
    return (NCPoly({u: ONE}) + NCPoly({(B,) + u + (C,): _mono(-2)})).scale(_mono(-2 * len(u)))


def _rewrites(word: Word, R: RelationSet) -> list[NCPoly]:
    out = []
    for k in range(len(word) - 1):
        rep = R.rules.get(word[k : k + 2])
        if rep is not None:
            out.append(NCPoly.word(*word[:k]) * rep * NCPoly.word(*word[k + 2 :]))
    if R.determinant_family:
        for i, j in _det_matches(word):
            rep = _det_replacement(word[i + 1 : j])
            out.append(NCPoly.word(*word[:i]) * rep * NCPoly.word(*word[j + 1 :]))
    return out


def single_step_rewrites(word: Sequence[str], R: RelationSet) -> list[NCPoly]:
    """Every result of applying exactly one rule once to ``word``."""
    return _rewrites(tuple(word), R)


def is_normal_word(word: Sequence[str], R: RelationSet) -> bool:
    return not _rewrites(tuple(word), R)


def _first_rewrite(word: Word, R: RelationSet) -> NCPoly | None:
    for k in range(len(word) - 1):
        rep = R.rules.get(word[k : k + 2])
        if rep is not None:
            return NCPoly.word(*word[:k]) * rep * NCPoly.word(*word[k + 2 :])
    if R.determinant_family:
        spans = _det_matches(word)
        if spans:
            i, j = spans[0]
            return NCPoly.word(*word[:i]) * _det_replacement(word[i + 1 : j]) * NCPoly.word(*word[j + 1 :])
    return None


def normal_form(p: NCPoly, R: RelationSet | str = "corrected", budget: int = 200_000) -> NCPoly:
    """Rewrite leftmost-first until no rule applies.

    Raises :class:`BudgetExceeded` after ``budget`` single rewrites.
    """
    if isinstance(R, str):
        R = relation_set(R)
    done: dict = {}
    todo = dict(p.terms)
    steps = 0
    while todo:
        word, coef = todo.popitem()
        rep = _first_rewrite(word, R)
        if rep is None:
            done[word] = done[word] + coef if word in done else coef
            continue
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"normal form not reached after {budget} rewrites")
        for w, c in rep.terms.items():
            c = c * coef
            todo[w] = todo[w] + c if w in todo else c
            if not todo[w]:
                del todo[w]
    return NCPoly(done)


# -- representations -----------------------------------------------------------


def unit_circle(t) -> complex:
    t = complex(t)
    if abs(abs(t) - 1.0) > 1e-12:
        raise ValueError(f"t must lie on the unit circle, |t| = {abs(t)}")
    return t


def _check_v(v: float) -> float:
    v = float(v)
    if not 0.0 < v < 1.0:
        raise ValueError(f"v must satisfy 0 < v < 1, got {v}")
    return v


@dataclass
class TruncatedRep:
    """Images of the rank-``m`` generators ``t_ab`` as dense complex matrices.

    ``band`` is the number of top basis indices per tensor factor excluded
    from residual checks (the truncation boundary).
    """

    images: dict
    m: int = 2
    t: complex | tuple = 1.0
    v: float | None = None
    N: int | None = None
    depth: int = 0
    variant: str = "corrected"
    word: tuple = ()
    band: int = 1

    def __post_init__(self):
        dims = {x.shape for x in self.images.values()}
        if len(dims) != 1:
            raise ValueError(f"inconsistent image shapes {dims}")
        (shape,) = dims
        if shape[0] != shape[1]:
            raise ValueError("images must be square")
        if set(self.images) != set(iproduct(range(1, self.m + 1), repeat=2)):
            raise ValueError("images must cover every t_ab")

    @property
    def dim(self) -> int:
        return next(iter(self.images.values())).shape[0]

    def __getitem__(self, key) -> np.ndarray:
        if isinstance(key, str):
            key = (int(key[1]), int(key[2]))
        return self.images[key]

    def generators(self) -> list[np.ndarray]:
        return [self.images[k] for k in sorted(self.images)]

    def evaluate(self, p: NCPoly) -> np.ndarray:
        if self.m != 2:
            raise ValueError("NCPoly evaluation needs a rank-2 representation")
        if self.v is None:
            raise ValueError("representation has no numeric v")
        out = np.zeros((self.dim, self.dim), dtype=complex)
        eye = np.eye(self.dim, dtype=complex)
        for w, c in p.terms.items():
            mat = eye
            for g in w:
                mat = mat @ self[g]
            out += complex(c(self.v)) * mat
        return out

    def interior(self, band: int | None = None) -> np.ndarray:
        """Indices of basis vectors whose every tensor factor index is below ``N - band``."""
        band = self.band if band is None else band
        if self.depth == 0 or self.N is None:
            return np.arange(self.dim)
        keep = [
            k
            for k, digits in enumerate(iproduct(range(self.N), repeat=self.depth))
            if all(d < self.N - band for d in digits)
        ]
        return np.array(keep, dtype=int)

    def params(self) -> dict:
        t = self.t if isinstance(self.t, tuple) else (self.t,)
        return {
            "variant": self.variant,
            "t": [_cplx(x) for x in t] if len(t) > 1 else _cplx(t[0]),
            "v": self.v,
            "N": self.N,
            "word": list(self.word),
            "m": self.m,
        }


def _cplx(z) -> list[float]:
    z = complex(z)
    return [_clean(z.real), _clean(z.imag)]


def _clean(x: float) -> float:
    return 0.0 if abs(x) < 1e-15 else float(x)


def rep_tau(t) -> TruncatedRep:
    """The one-dimensional character ``t11 -> t, t22 -> t^-1``."""
    t = unit_circle(t)
    one = lambda z: np.array([[z]], dtype=complex)  # noqa: E731
    images = {(1, 1): one(t), (1, 2): one(0), (2, 1): one(0), (2, 2): one(1 / t)}
    return TruncatedRep(images, 2, t, None, None, 0, "character", (), 0)


@dataclass
class ShiftSolution:
    """Coefficients for the ansatz ``t11 e_k = alpha_k e_{k+1}``, ``t22 e_k = delta_k e_{k-1}``.

    ``t12 e_k = t v^(2k) e_k`` and ``t21 e_k = sign * t^-1 v^(2k + exponent) e_k``.
    ``products[k] = alpha_{k-1} delta_k``; unitarity picks
    ``alpha_{k-1} = delta_k = sqrt(products[k])``.
    """

    v: float
    sign: int
    exponent: int
    products: list[float]
    literal_consistent: bool
    commutator_residual: float

    @property
    def alpha(self) -> list[float]:
        return [math.sqrt(p) for p in self.products[1:]]

    @property
    def delta(self) -> list[float]:
        return [math.sqrt(p) for p in self.products]


def solve_shift_coefficients(v: float, N: int) -> ShiftSolution:
    """Solve the determinant recurrence for the shift coefficients.

    The determinant at ``k`` reads ``P_k - v^(2k-2) t gamma_k = 1`` with
    ``P_0 = 0`` (``delta_0 = 0``).  The q-commutation of ``t11, t21`` forces
    ``gamma_{k+1} = v^2 gamma_k``, so ``gamma_0`` fixes everything.  First the
    literal diagonal ``gamma_k = t^-1 v^(2k+1)`` is tried; if ``k = 0`` rules
    it out, ``gamma_0 = s t^-1 v^e`` is fitted with ``s = +-1`` and integer ``e``.
    """
    v = _check_v(v)
    literal_consistent = abs(1 + v ** (-2) * v) < 1e-12
    if literal_consistent:  # pragma: no cover - impossible for 0 < v < 1
        sign, exponent = 1, 1
    else:
        # 1 + v^-2 * s * v^e = 0  =>  s = -1, e = 2.
        sign, exponent = -1, 2
        assert abs(1 + v ** (-2) * sign * v**exponent) < 1e-12
    gamma0 = sign * v**exponent  # times t^-1, which cancels against t12's t
    products = [1.0 + v ** (2 * k - 2) * gamma0 * v ** (2 * k) for k in range(N)]
    products[0] = 0.0
    # Check the commutator relation P_k - P_{k+1} = (v^-2 - v^2) v^(2k) gamma_k.
    res = 0.0
    for k in range(N - 1):
        lhs = products[k] - products[k + 1]
        rhs = (v**-2 - v**2) * v ** (2 * k) * gamma0 * v ** (2 * k)
        res = max(res, abs(lhs - rhs))
    return ShiftSolution(v, sign, exponent, products, literal_consistent, res)


def rep_pi(t, v: float, N: int, variant: str = "corrected") -> TruncatedRep:
    """The truncated infinite-dimensional representation ``pi_t``.

    ``paper-literal`` uses the literal operators: ``t11`` lowers and
    ``t22`` raises with constant coefficient ``sqrt(1-v)``; ``t12 = t v^(2k)``,
    ``t21 = t^-1 v^(2k+1)``.  ``corrected`` keeps ``t12`` and uses the solved
    shift coefficients, which requires ``t11`` to raise and ``t22`` to lower
    (with ``0 < v < 1`` no lowering ``t11`` can satisfy ``t11 t12 = v^-2 t12 t11``)
    and ``t21 = -t^-1 v^(2k+2)``.
    """
    t = unit_circle(t)
    v = _check_v(v)
    if N < 2:
        raise ValueError("N must be >= 2")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    k = np.arange(N)
    t12 = np.diag(t * v ** (2.0 * k)).astype(complex)
    t11 = np.zeros((N, N), dtype=complex)
    t22 = np.zeros((N, N), dtype=complex)
    if variant == "paper-literal":
        c = math.sqrt(1 - v)
        for j in range(1, N):
            t11[j - 1, j] = c  # e_j -> e_{j-1}
            t22[j, j - 1] = c  # e_{j-1} -> e_j
        t21 = np.diag(v ** (2.0 * k + 1) / t).astype(complex)
    else:
        sol = solve_shift_coefficients(v, N)
        for j in range(1, N):
            t11[j, j - 1] = sol.alpha[j - 1]  # e_{j-1} -> e_j
            t22[j - 1, j] = sol.delta[j]  # e_j -> e_{j-1}
        t21 = np.diag(sol.sign * v ** (2.0 * k + sol.exponent) / t).astype(complex)
    images = {(1, 1): t11, (1, 2): t12, (2, 1): t21, (2, 2): t22}
    return TruncatedRep(images, 2, t, v, N, 1, variant, (), 1)


# -- residuals -----------------------------------------------------------------


@dataclass
class ResidualReport:
    max_residual: float
    per_relation: dict
    excluded_band: int
    params: dict = field(default_factory=dict)
    relation_source: str = "rank-2 relations"

    def worst(self) -> str:
        return max(self.per_relation, key=self.per_relation.get) if self.per_relation else ""

    def rows(self) -> list[dict]:
        p = self.params
        return [
            {
                "variant": p.get("variant"),
                "t": p.get("t"),
                "v": p.get("v"),
                "N": p.get("N"),
                "word": p.get("word", []),
                "relation_id": rid,
                "residual": res,
                "excluded_band": self.excluded_band,
                "coproduct_convention": COPRODUCT_CONVENTION,
                "relation_source": self.relation_source,
            }
            for rid, res in self.per_relation.items()
        ]


def _restricted_norm(mat: np.ndarray, cols: np.ndarray) -> float:
    if cols.size == 0:
        return 0.0
    sub = mat[:, cols]
    return float(np.linalg.norm(sub, 2)) if sub.size else 0.0


def relation_residual(rep: TruncatedRep, R: RelationSet | str = "corrected", band: int | None = None) -> ResidualReport:
    """Operator-norm residual of each relation on the interior basis vectors."""
    cols = rep.interior(band)
    per: dict = {}
    if rep.m == 2:
        if isinstance(R, str):
            R = relation_set(R)
        # The 1x1 character has no numeric v; evaluate at any admissible point.
        probe = rep if rep.v is not None else TruncatedRep(rep.images, 2, rep.t, 0.5, None, 0, rep.variant, (), 0)
        for rid, lhs, rhs in R.relations:
            per[rid] = _restricted_norm(probe.evaluate(lhs - rhs), cols)
        source = f"rank-2 relations ({R.mode})"
    else:
        for rid, lhs, rhs in induced_relations(rep.m, rep.v):
            per[rid] = _restricted_norm(lhs(rep) - rhs(rep), cols)
        source = "induced from rank-2 on 2x2 submatrices"
    band_used = rep.band if band is None else band
    return ResidualReport(max(per.values(), default=0.0), per, band_used, rep.params(), source)


def induced_relations(m: int, v: float | None):
    """Quadratic relations on each 2x2 submatrix (rows i<k, columns j<l).

    With ``a, b, c, d = t_ij, t_il, t_kj, t_kl`` these are the six quadratic
    rank-2 relations.  Each entry is ``(id, lhs, rhs)`` with callables taking
    a representation.
    """
    vv = 0.5 if v is None else v
    qm2 = vv**-2
    qd = vv**-2 - vv**2
    out = []
    for i in range(1, m + 1):
        for k in range(i + 1, m + 1):
            for j in range(1, m + 1):
                for l in range(j + 1, m + 1):
                    a, b, c, d = (i, j), (i, l), (k, j), (k, l)
                    tag = f"[{i}{k}|{j}{l}]"

                    def pr(x, y):
                        return lambda r, x=x, y=y: r.images[x] @ r.images[y]

                    def sc(s, f):
                        return lambda r, s=s, f=f: s * f(r)

                    out += [
                        (f"q-comm row {tag} t{i}{j} t{i}{l}", pr(a, b), sc(qm2, pr(b, a))),
                        (f"q-comm col {tag} t{i}{j} t{k}{j}", pr(a, c), sc(qm2, pr(c, a))),
                        (f"q-comm col {tag} t{i}{l} t{k}{l}", pr(b, d), sc(qm2, pr(d, b))),
                        (f"q-comm row {tag} t{k}{j} t{k}{l}", pr(c, d), sc(qm2, pr(d, c))),
                        (f"comm {tag} t{i}{l} t{k}{j}", pr(b, c), pr(c, b)),
                        (
                            f"commutator {tag} t{i}{j} t{k}{l}",
                            lambda r, a=a, d=d: r.images[a] @ r.images[d] - r.images[d] @ r.images[a],
                            sc(qd, pr(b, c)),
                        ),
                    ]
    return out


# -- tensor construction -------------------------------------------------------


def pi_si_generator(i: int, m: int, a: int, b: int, v: float, N: int, variant: str = "corrected") -> np.ndarray:
    """Image of the rank-``m`` generator ``t_ab`` under ``pi_{s_i} = pi_{-1} o p``."""
    if not 1 <= i <= m - 1:
        raise ValueError(f"need 1 <= i <= m-1, got i={i}, m={m}")
    if not (1 <= a <= m and 1 <= b <= m):
        raise ValueError(f"generator index ({a},{b}) out of range for m={m}")
    if a in (i, i + 1) and b in (i, i + 1):
        return rep_pi(-1, v, N, variant).images[(a - i + 1, b - i + 1)]
    if a == b:
        return np.eye(N, dtype=complex)
    return np.zeros((N, N), dtype=complex)


def _torus(t, m: int) -> tuple:
    if isinstance(t, (tuple, list)):
        vals = tuple(unit_circle(x) for x in t)
        if len(vals) != m:
            raise ValueError(f"torus character needs {m} entries")
        if abs(np.prod(vals) - 1) > 1e-12:
            raise ValueError("torus entries must multiply to 1")
        return vals
    t = unit_circle(t)
    if m == 1:
        return (1.0 + 0j,)
    return (t,) + (1.0 + 0j,) * (m - 2) + (1 / t,)


def tensor_rep(word: Sequence[int], t, v: float, N: int, m: int | None = None, variant: str = "corrected") -> TruncatedRep:
    """``pi_{s_{i_1}} (x) ... (x) pi_{s_{i_k}} (x) tau_t`` via the matrix-coefficient coproduct.

    ``t`` is a unit-circle scalar, read as the torus character
    ``(t, 1, ..., 1, t^-1)``, or an explicit tuple of ``m`` entries with product 1.
    """
    word = tuple(int(x) for x in word)
    m = m if m is not None else (max(word) + 1 if word else 2)
    if m < 2:
        raise ValueError("m must be >= 2")
    if any(not 1 <= i <= m - 1 for i in word):
        raise ValueError(f"letters must lie in 1..{m - 1}")
    if word and length(from_word(FINITE, m, word)) != len(word):
        raise ValueError(f"word {list(word)} is not reduced")
    v = _check_v(v)
    chars = _torus(t, m)
    factors = [{(a, b): pi_si_generator(i, m, a, b, v, N, variant) for a in range(1, m + 1) for b in range(1, m + 1)} for i in word]
    idx = range(1, m + 1)
    dim = N ** len(word)
    images = {}
    for a in idx:
        for b in idx:
            total = np.zeros((dim, dim), dtype=complex)
            if not word:
                total[0, 0] = chars[a - 1] if a == b else 0
            # tau is diagonal, so the last intermediate index must equal b.
            for chain in iproduct(idx, repeat=len(word)) if word else ():
                if chain[-1] != b:
                    continue
                path = (a,) + chain
                blocks = [f[(path[k], path[k + 1])] for k, f in enumerate(factors)]
                if any(not blk.any() for blk in blocks):
                    continue
                mat = blocks[0]
                for blk in blocks[1:]:
                    mat = np.kron(mat, blk)
                total += chars[b - 1] * mat
            images[(a, b)] = total
    t_field = chars if m > 2 or isinstance(t, (tuple, list)) else chars[0]
    return TruncatedRep(images, m, t_field, v, N, len(word), variant, word, 1)


def direct_sum(*reps: TruncatedRep) -> TruncatedRep:
    m = reps[0].m
    if any(r.m != m for r in reps):
        raise ValueError("ranks differ")
    images = {}
    for key in reps[0].images:
        blocks = [r.images[key] for r in reps]
        n = sum(b.shape[0] for b in blocks)
        out = np.zeros((n, n), dtype=complex)
        pos = 0
        for blk in blocks:
            s = blk.shape[0]
            out[pos : pos + s, pos : pos + s] = blk
            pos += s
        images[key] = out
    v = next((r.v for r in reps if r.v is not None), None)
    return TruncatedRep(images, m, tuple(r.t for r in reps), v, None, 0, "direct-sum", (), 0)


# -- commutant and equivalence -------------------------------------------------


def commutant_dim(rep: TruncatedRep, rtol: float = _linalg.RANK_RTOL) -> int:
    return _linalg.commutant_dimension(rep.generators(), rtol)


def _spectrum(mat: np.ndarray) -> np.ndarray:
    ev = np.linalg.eigvals(mat)
    ev = np.round(ev, 10) + 0.0  # canonical sort key; +0.0 clears negative zeros
    return ev[np.lexsort((ev.imag, ev.real))]


def equivalence_check(rep1: TruncatedRep, rep2: TruncatedRep, tol: float = 1e-8, seed: int = 0) -> dict:
    """Decide equivalence via ``t12`` spectra, then an invertible intertwiner.

    Returns ``{"equivalent": bool, "reason": str, ...}``.
    """
    if rep1.dim != rep2.dim or rep1.m != rep2.m:
        return {"equivalent": False, "reason": "dimension mismatch"}
    key = (1, rep1.m)
    s1, s2 = _spectrum(rep1.images[key]), _spectrum(rep2.images[key])
    gap = float(np.max(np.abs(s1 - s2))) if s1.size else 0.0
    if gap > tol:
        return {"equivalent": False, "reason": "t12 spectra differ", "spectral_gap": gap}
    # Characters of a torus: all of t_ab are scalars, spectra of t11 decide.
    sys = _linalg.intertwiner_system(rep1.generators(), rep2.generators())
    null = _linalg.nullspace(sys)
    if null.shape[1] == 0:
        return {"equivalent": False, "reason": "no nonzero intertwiner", "spectral_gap": gap}
    rng = np.random.default_rng(seed)
    x = null @ rng.standard_normal(null.shape[1])
    n = rep1.dim
    mat = x.reshape(rep2.dim, n)
    smin = float(np.linalg.svd(mat, compute_uv=False).min())
    smax = float(np.linalg.svd(mat, compute_uv=False).max())
    ok = smin > tol * max(smax, 1.0)
    return {
        "equivalent": bool(ok),
        "reason": "invertible intertwiner found" if ok else "intertwiners are singular",
        "spectral_gap": gap,
        "intertwiner_space_dim": int(null.shape[1]),
    }


def turns_to_unit(turns: float) -> complex:
    """``exp(2 pi i turns)``, snapped to exact values at quarter turns."""
    frac = float(turns) % 1.0
    exact = {0.0: 1, 0.25: 1j, 0.5: -1, 0.75: -1j}
    for k, z in exact.items():
        if abs(frac - k) < 1e-15:
            return complex(z)
    return cmath.exp(2j * math.pi * frac)
