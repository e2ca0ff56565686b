"""Acceptance criteria. Each test records one PASS/FAIL line in the terminal summary."""

import itertools
import json
import math
import time

import numpy as np

from heckelab.bernstein import check_bernstein_relations, check_lattice_homomorphism, check_lattice_steps
from heckelab.cli import main as cli_main
from heckelab.coxeter import FINITE, bfs_lengths
from heckelab.fqsl2 import (
    GENERATORS,
    NCPoly,
    commutant_dim,
    equivalence_check,
    is_normal_word,
    normal_form,
    relation_residual,
    relation_set,
    rep_pi,
    rep_tau,
    single_step_rewrites,
)
from heckelab.hecke import HeckeElement, mul, verify_presentation
from heckelab.schur import doty_giaquinto_check, duality_check
from heckelab.specht import d_dimension, is_l_regular, partitions, specht_dimension

from conftest import SESSION_START
from oracles import hook_free_syt_count, oracle_product, right_gen_matrix


def test_c01_hecke_oracle_equivalence(criterion):
    with criterion(1, "Hecke product matches regular-representation oracle, n=3,4"):
        t0 = time.perf_counter()
        for n in (3, 4):
            mats = {i: right_gen_matrix(n, i) for i in range(1, n)}
            elems = sorted(bfs_lengths(FINITE, n, n * (n - 1) // 2))
            assert len(elems) == math.factorial(n)
            for a, b in itertools.product(elems, repeat=2):
                got = mul(HeckeElement.basis(a), HeckeElement.basis(b)).terms
                assert got == oracle_product(n, a, b, mats), (a, b)
        assert time.perf_counter() - t0 < 60


def test_c02_presentation_suite(criterion):
    with criterion(2, "braid, quadratic and length-additivity, finite rank<=4 and affine rank 2, L=6"):
        cases = [("finite", r, 6) for r in (2, 3, 4)] + [("affine", 2, 6)]
        for kind, r, L in cases:
            rep = verify_presentation(kind, r, L)
            assert rep.passed, (kind, r, rep.violations[:3])
            assert all(rep.counts[f] > 0 for f in ("quadratic", "length_additive"))
            if r >= 3:
                assert rep.counts["braid"] > 0


def test_c03_bernstein_suite(criterion):
    with criterion(3, "Bernstein relations r=2,3 cutoff 8 and lattice homomorphism"):
        for r in (2, 3):
            bad = [x.as_dict() for x in check_bernstein_relations(r, cutoff=8) if not x.equal]
            assert not bad, bad[:2]
        # Full radius-2 box at r=2; at r=3 the full box at radius 1 plus
        # every unit step X^lam X^{+-e_j} over the radius-2 box.
        for reports in (
            check_lattice_homomorphism(2, 2),
            check_lattice_homomorphism(3, 1),
            check_lattice_steps(3, 2),
        ):
            assert reports and all(x.equal for x in reports)


def test_c04_specht_dimensions(criterion):
    with criterion(4, "dim S^lam = #SYT and sum of squares = n! for n<=5, q=3"):
        for n in range(1, 6):
            dims = []
            for lam in partitions(n):
                d = specht_dimension(lam, 3.0)
                assert d == hook_free_syt_count(lam), lam
                dims.append(d)
            assert sum(d * d for d in dims) == math.factorial(n)


def test_c05_l_regularity(criterion):
    with criterion(5, "D^lam nonzero iff lam is l-regular, n<=5, l in {2,3}"):
        for n, l in itertools.product(range(1, 6), (2, 3)):
            for lam in partitions(n):
                assert (d_dimension(lam, l) > 0) == is_l_regular(lam, l), (lam, l)


def test_c06_schur_weyl(criterion):
    with criterion(6, "dim End_H T(n,r) = dim S(n,r) = C(n^2+r-1, r)"):
        for (n, r), q in itertools.product([(2, 2), (2, 3), (3, 2)], (3.0, 0.25, 2.7)):
            rep = duality_check(n, r, q)
            assert rep.dim_formula == math.comb(n * n + r - 1, r)
            assert rep.match, rep.as_dict()


def test_c07_doty_giaquinto(criterion):
    with criterion(7, "Doty-Giaquinto (a)-(d): exact d<=4, numeric d<=8 at v=0.7"):
        for d in range(1, 5):
            out = doty_giaquinto_check(d)
            assert all(out[k]["pass"] for k in "abcd"), (d, out)
        for d in range(1, 9):
            out = doty_giaquinto_check(d, 0.7)
            assert all(out[k]["residual"] < 1e-12 for k in "abcd"), (d, out)


def test_c08_rewriting(criterion):
    with criterion(8, "normal form idempotent, degree-3 confluent, relations reduce to 0"):
        R = relation_set("corrected")
        for w in itertools.product(GENERATORS, repeat=3):
            results = {normal_form(x, R) for x in single_step_rewrites(w, R)}
            assert len(results) <= 1, w
            nf = normal_form(NCPoly.word(*w), R)
            assert normal_form(nf, R) == nf
            assert all(is_normal_word(u, R) for u in nf.terms)
        for rid, lhs, rhs in R.relations:
            assert not normal_form(lhs - rhs, R), rid


def test_c09_representation_residuals(criterion):
    with criterion(9, "corrected pi_t residual < 1e-10; literal commutator residual > 0.1"):
        for v, t in itertools.product((0.3, 0.5, 0.8), (1, 1j)):
            rep = relation_residual(rep_pi(t, v, 32))
            assert rep.max_residual < 1e-10, (v, t, rep.per_relation)
        lit = relation_residual(rep_pi(1, 0.5, 32, "paper-literal"), "paper-literal")
        assert lit.per_relation["commutator t11 t22"] > 0.1


def test_c10_irreducibility_and_inequivalence(criterion):
    with criterion(10, "commutant of pi_t is scalar; equivalence check separates t != t'"):
        for N in (8, 16):
            assert commutant_dim(rep_pi(1, 0.5, N)) == 1
        ts = [1, 1j, np.exp(0.3j)]
        for t1, t2 in itertools.combinations(ts, 2):
            assert not equivalence_check(rep_pi(t1, 0.5, 12), rep_pi(t2, 0.5, 12))["equivalent"]
            assert not equivalence_check(rep_tau(t1), rep_tau(t2))["equivalent"]
        assert equivalence_check(rep_pi(1j, 0.5, 12), rep_pi(1j, 0.5, 12))["equivalent"]


def test_c11_runtime_and_determinism(criterion, capsys):
    with criterion(11, "suite under 300 s and byte-identical CLI output for a fixed seed"):
        argv = ["fq", "equiv", "--N", "8", "--v", "0.5", "--t1", "0.1", "--t2", "0.1", "--seed", "3"]
        outs = []
        for _ in range(2):
            cli_main(argv)
            outs.append(capsys.readouterr().out)
        assert outs[0] == outs[1]
        json.loads(outs[0])
        assert time.perf_counter() - SESSION_START < 300
