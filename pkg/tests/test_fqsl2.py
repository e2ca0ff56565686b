import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from heckelab.fqsl2 import (
    GENERATORS,
    BudgetExceeded,
    NCPoly,
    commutant_dim,
    direct_sum,
    equivalence_check,
    induced_relations,
    is_normal_word,
    normal_form,
    parse_ncpoly,
    pi_si_generator,
    relation_residual,
    relation_set,
    rep_pi,
    rep_tau,
    single_step_rewrites,
    solve_shift_coefficients,
    tensor_rep,
    turns_to_unit,
)
from heckelab.laurent import LaurentPoly

W = NCPoly.word
v2 = LaurentPoly.monomial(2)
vm2 = LaurentPoly.monomial(-2)


# -- rewriting ------------------------------------------------------------------


def test_normal_form_examples():
    assert normal_form(W("t12", "t11")) == W("t11", "t12", coeff=v2)
    assert normal_form(W("t21", "t12")) == W("t12", "t21")
    printed = W("t11", "t22") - W("t12", "t21", coeff=vm2 - v2)
    # Without the determinant the example holds verbatim.
    assert normal_form(W("t22", "t11"), "bialgebra") == printed
    # With it both sides reduce further but agree.
    assert normal_form(W("t22", "t11")) == normal_form(printed)
    assert normal_form(W("t22", "t11")) == NCPoly.one() + W("t12", "t21", coeff=v2)


def test_parse_and_print_round_trip():
    p = parse_ncpoly("t22*t11 - (v^-2 - v^2)*t12*t21 + 3/2*v^-1 t11")
    assert p == W("t22", "t11") - W("t12", "t21", coeff=vm2 - v2) + W("t11", coeff=LaurentPoly.monomial(-1, Fraction(3, 2)))
    assert parse_ncpoly(str(p)) == p
    with pytest.raises(ValueError):
        parse_ncpoly("t13")


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        normal_form(W(*("t22",) * 4 + ("t11",) * 4), "corrected", budget=5)


@pytest.mark.parametrize("mode", ["corrected", "bialgebra"])
def test_confluence_degree_three(mode):
    R = relation_set(mode)
    for w in itertools.product(GENERATORS, repeat=3):
        results = {normal_form(x, R) for x in single_step_rewrites(w, R)}
        assert len(results) <= 1, w


def test_literal_mode_is_not_confluent():
    R = relation_set("paper-literal")
    split = []
    for w in itertools.product(GENERATORS, repeat=3):
        if len({normal_form(x, R) for x in single_step_rewrites(w, R)}) > 1:
            split.append(w)
    assert ("t12", "t11", "t12") in split


@pytest.mark.parametrize("mode", ["corrected", "bialgebra", "paper-literal"])
def test_relations_reduce_to_zero(mode):
    R = relation_set(mode)
    for rid, lhs, rhs in R.relations:
        assert not normal_form(lhs - rhs, R), rid


def test_normal_words_corrected():
    R = relation_set("corrected")
    normal = [w for w in itertools.product(GENERATORS, repeat=2) if is_normal_word(w, R)]
    # sorted words without both t11 and t22
    assert ("t11", "t22") not in normal and ("t11", "t12") in normal and len(normal) == 9


words = st.lists(st.sampled_from(GENERATORS), max_size=6).map(tuple)
coeffs = st.tuples(st.integers(-3, 3), st.integers(-2, 2).filter(bool)).map(lambda kc: LaurentPoly.monomial(*kc))
polys = st.lists(st.tuples(words, coeffs), max_size=4).map(lambda ts: NCPoly(dict(ts)))


@given(polys)
def test_normal_form_idempotent(p):
    for mode in ("corrected", "bialgebra"):
        nf = normal_form(p, mode)
        assert normal_form(nf, mode) == nf
        R = relation_set(mode)
        assert all(is_normal_word(w, R) for w in nf.terms)


@given(polys, polys)
def test_normal_form_is_linear_and_multiplicative(p, q):
    assert normal_form(p + q) == normal_form(p) + normal_form(q)
    assert normal_form(p * q) == normal_form(normal_form(p) * normal_form(q))


small_polys = st.lists(
    st.tuples(st.lists(st.sampled_from(GENERATORS), max_size=4).map(tuple), coeffs), max_size=3
).map(lambda ts: NCPoly(dict(ts)))


@given(small_polys)
def test_representation_respects_normal_form(p):
    rep = rep_pi(1j, 0.5, 12)
    cols = rep.interior(band=4)
    diff = rep.evaluate(p) - rep.evaluate(normal_form(p))
    assert np.linalg.norm(diff[:, cols], 2) < 1e-8


# -- representations ------------------------------------------------------------


def test_rep_tau_examples():
    r = rep_tau(1)
    assert r["t11"][0, 0] == 1 and r["t22"][0, 0] == 1 and r["t12"][0, 0] == 0 and r["t21"][0, 0] == 0
    r = rep_tau(1j)
    assert r["t11"][0, 0] == 1j and r["t22"][0, 0] == -1j
    for turns in (0, 0.25, 0.5, 0.75):
        assert relation_residual(rep_tau(turns_to_unit(turns))).max_residual == 0.0
    # generic angles: t * t^-1 is 1 up to one rounding
    assert relation_residual(rep_tau(turns_to_unit(0.1))).max_residual <= 4 * np.finfo(float).eps
    with pytest.raises(ValueError):
        rep_tau(2)


def test_rep_pi_literal_display():
    v, N, t = 0.5, 8, 1j
    r = rep_pi(t, v, N, "paper-literal")
    assert np.allclose(np.diag(r["t12"]), t * v ** (2 * np.arange(N)))
    assert not r["t11"][:, 0].any()  # e_0 -> 0
    assert np.isclose(r["t11"][0, 1], math.sqrt(1 - v))
    assert np.allclose(np.diag(r["t21"]), v ** (2 * np.arange(N) + 1) / t)


@pytest.mark.parametrize("variant", ["corrected", "paper-literal"])
def test_t12_spectrum(variant):
    v, N, t = 0.3, 10, turns_to_unit(0.125)
    ev = np.sort_complex(np.linalg.eigvals(rep_pi(t, v, N, variant)["t12"]))
    assert np.allclose(ev, np.sort_complex(t * v ** (2 * np.arange(N))))


def test_parameter_validation():
    for bad in [dict(t=1.5, v=0.5, N=4), dict(t=1, v=1.2, N=4), dict(t=1, v=0.5, N=1)]:
        with pytest.raises(ValueError):
            rep_pi(**bad)
    with pytest.raises(ValueError):
        rep_pi(1, 0.5, 4, "other")


def test_shift_coefficients_match_symbolic_recurrence():
    """Solve the recurrences from scratch with sympy and compare."""
    K = 6
    v, t = sp.symbols("v t", positive=True)
    g = sp.symbols(f"g0:{K + 1}")
    P = sp.symbols(f"P0:{K + 1}")
    eqs = [sp.Eq(P[0], 0)]
    for k in range(K):
        eqs.append(sp.Eq(g[k + 1], v**2 * g[k]))  # t11 t21 = v^-2 t21 t11 with t11 raising
    for k in range(K + 1):
        eqs.append(sp.Eq(P[k] - v**-2 * t * v ** (2 * k) * g[k], 1))  # determinant on e_k
    sol = sp.solve(eqs, list(g) + list(P), dict=True)[0]
    for k in range(K):  # commutator relation is then automatic
        lhs = sol[P[k]] - sol[P[k + 1]]
        rhs = (v**-2 - v**2) * t * v ** (2 * k) * sol[g[k]]
        assert sp.simplify(lhs - rhs) == 0
    assert sp.simplify(sol[g[0]] - (-(v**2) / t)) == 0
    for vv in (0.3, 0.5, 0.8):
        num = solve_shift_coefficients(vv, K + 1)
        assert num.sign == -1 and num.exponent == 2 and not num.literal_consistent
        expect = [float(sol[P[k]].subs(v, vv)) for k in range(K + 1)]
        assert np.allclose(num.products, expect, atol=1e-15)
        assert num.commutator_residual < 1e-14


@pytest.mark.parametrize("v", [0.3, 0.5, 0.8])
@pytest.mark.parametrize("t", [1, 1j])
def test_corrected_residual(v, t):
    rep = relation_residual(rep_pi(t, v, 32))
    assert rep.max_residual < 1e-10
    assert rep.excluded_band == 1


def test_literal_residual_fails_on_commutator():
    rep = relation_residual(rep_pi(1, 0.5, 32, "paper-literal"), "paper-literal")
    assert rep.per_relation["commutator t11 t22"] > 0.1
    assert rep.rows()[0]["coproduct_convention"].startswith("Delta")


@pytest.mark.parametrize("N", [8, 16])
@pytest.mark.parametrize("v", [0.3, 0.5, 0.8])
def test_commutant_is_scalar(N, v):
    assert commutant_dim(rep_pi(1, v, N)) == 1


def test_commutant_examples():
    assert commutant_dim(rep_tau(1j)) == 1
    assert commutant_dim(direct_sum(rep_tau(1), rep_tau(1j))) == 2
    assert commutant_dim(direct_sum(rep_tau(1), rep_tau(1))) == 4


def test_equivalence_examples():
    a, b = rep_pi(1, 0.5, 10), rep_pi(1j, 0.5, 10)
    assert not equivalence_check(a, b)["equivalent"]
    assert equivalence_check(a, a)["equivalent"]
    assert not equivalence_check(rep_tau(1), rep_tau(1j))["equivalent"]
    assert equivalence_check(rep_tau(1j), rep_tau(1j))["equivalent"]
    assert not equivalence_check(rep_tau(1), a)["equivalent"]


# -- tensor construction --------------------------------------------------------


def test_pi_si_examples():
    v, N = 0.5, 6
    pm = rep_pi(-1, v, N)
    for a, b in itertools.product((1, 2), repeat=2):
        assert np.array_equal(pi_si_generator(1, 2, a, b, v, N), pm.images[(a, b)])
    assert np.array_equal(pi_si_generator(1, 3, 3, 3, v, N), np.eye(N))
    assert not pi_si_generator(1, 3, 1, 3, v, N).any()
    assert np.array_equal(pi_si_generator(2, 3, 2, 3, v, N), pm.images[(1, 2)])
    with pytest.raises(ValueError):
        pi_si_generator(3, 3, 1, 1, v, N)


def test_tensor_empty_word_is_tau():
    rep = tensor_rep([], 1j, 0.5, 8)
    tau = rep_tau(1j)
    assert all(np.array_equal(rep.images[k], tau.images[k]) for k in tau.images)


def test_tensor_single_letter():
    rep = tensor_rep([1], 1, 0.5, 8)
    pm = rep_pi(-1, 0.5, 8)
    assert all(np.allclose(rep.images[k], pm.images[k]) for k in pm.images)
    # a nontrivial torus character twists the second column
    tw = tensor_rep([1], 1j, 0.5, 8)
    assert np.allclose(tw.images[(1, 1)], pm.images[(1, 1)] * 1j)
    assert np.allclose(tw.images[(1, 2)], pm.images[(1, 2)] * -1j)


def test_tensor_rejects_non_reduced():
    with pytest.raises(ValueError):
        tensor_rep([1, 1], 1, 0.5, 4)


@pytest.mark.parametrize("word,m", [([1, 2], 3), ([2, 1], 3), ([1, 2, 1], 3), ([1], 2), ([2], 3)])
def test_tensor_induced_relations(word, m):
    rep = tensor_rep(word, turns_to_unit(0.3), 0.5, 5, m=m)
    res = relation_residual(rep)
    assert res.max_residual < 1e-8
    assert "induced" in res.relation_source or m == 2


def test_induced_relation_count():
    # C(3,2)^2 submatrices times six relations
    assert len(induced_relations(3, 0.5)) == 9 * 6


def test_tensor_equivalence_under_braid_words():
    # the two reduced words of the longest element give equivalent representations
    a = tensor_rep([1, 2, 1], 1, 0.5, 3, m=3)
    b = tensor_rep([2, 1, 2], 1, 0.5, 3, m=3)
    ea = np.sort_complex(np.round(np.linalg.eigvals(a.images[(1, 3)]), 10))
    eb = np.sort_complex(np.round(np.linalg.eigvals(b.images[(1, 3)]), 10))
    assert np.allclose(ea, eb)
