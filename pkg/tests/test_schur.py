from math import comb

import numpy as np
import pytest

from heckelab.coxeter import FINITE, bfs_lengths
from heckelab.hecke import HeckeElement
from heckelab.laurent import ONE
from heckelab.schur import (
    COPRODUCT_CONVENTION,
    TensorSpace,
    double_cosets,
    doty_giaquinto_check,
    doty_giaquinto_operators,
    duality_check,
    enumerate_index,
    poincare,
    projector,
    schur_basis,
    schur_dimension_formula,
)


def test_enumerate_index_examples():
    assert enumerate_index(2, 2) == [(1, 1), (1, 2), (2, 2)]
    assert len(enumerate_index(3, 2)) == 6
    assert len(enumerate_index(2, 3)) == 4
    with pytest.raises(ValueError):
        enumerate_index(0, 2)


def test_projector_examples():
    assert projector((1, 2)) == HeckeElement.one(FINITE, 2)
    assert projector((1, 1)) == HeckeElement.one(FINITE, 2) + HeckeElement.gen(FINITE, 2, 1)
    assert projector((1, 1, 2)) == HeckeElement.one(FINITE, 3) + HeckeElement.gen(FINITE, 3, 1)


def test_projector_is_scaled_idempotent():
    for i in [(1, 1), (1, 1, 2), (1, 1, 1)]:
        e = projector(i)
        assert e * e == e.scale(poincare(i))


@pytest.mark.parametrize("n,r", [(2, 1), (2, 2), (1, 3), (2, 3), (3, 2), (3, 3), (4, 2), (2, 4)])
def test_basis_count_matches_formula(n, r):
    assert len(schur_basis(n, r)) == schur_dimension_formula(n, r) == comb(n * n + r - 1, r)


def test_basis_blocks_are_stable():
    assert all(x.check_blocks() for _, _, x in schur_basis(2, 2))
    assert all(x.check_blocks() for _, _, x in schur_basis(2, 3))


def test_double_cosets_partition_the_group():
    for i in enumerate_index(2, 3):
        for j in enumerate_index(2, 3):
            cosets = double_cosets(i, j)
            flat = [w for c in cosets for w in c]
            assert sorted(flat) == sorted(bfs_lengths(FINITE, 3, 3))


def test_tensor_space_dimension():
    assert TensorSpace(2, 2).dim == 4
    assert TensorSpace(2, 3).dim == 8
    assert TensorSpace(3, 2).dim == 9


def test_right_action_by_identity():
    ts = TensorSpace(2, 2)
    cols = ts.right_action(HeckeElement.one(FINITE, 2))
    assert cols == [{k: ONE} for k in range(ts.dim)]


@pytest.mark.parametrize("n,r", [(2, 2), (2, 3)])
def test_left_and_right_actions_commute(n, r):
    ts = TensorSpace(n, r)
    right = [ts.right_action(HeckeElement.gen(FINITE, r, k)) for k in range(1, r)]
    for _, _, x in schur_basis(n, r):
        left = ts.left_action(x)
        for rt in right:
            a = _compose(left, rt)
            b = _compose(rt, left)
            assert a == b


def _compose(outer, inner):
    out = []
    for col in inner:
        acc: dict = {}
        for mid, c in col.items():
            for row, d in outer[mid].items():
                acc[row] = acc.get(row, 0 * ONE) + d * c
        out.append({k: v for k, v in acc.items() if v})
    return out


def test_schur_product_is_composition():
    ts = TensorSpace(2, 2)
    basis = schur_basis(2, 2)
    v = 0.6
    for _, _, x in basis[:6]:
        for _, _, y in basis[:6]:
            lhs = ts.to_numeric(ts.left_action(x * y), v)
            rhs = ts.to_numeric(ts.left_action(x), v) @ ts.to_numeric(ts.left_action(y), v)
            assert np.allclose(lhs, rhs, atol=1e-10)


@pytest.mark.parametrize("n,r,dim", [(2, 2, 10), (2, 3, 20), (3, 2, 45), (1, 3, 1)])
def test_duality_examples(n, r, dim):
    rep = duality_check(n, r, 3.0)
    assert rep.dim_endH == rep.dim_S == dim and rep.match


def test_affine_mode_is_non_conclusive():
    d = duality_check(2, 2, 3.0, mode="affine", cutoff=4).as_dict()
    assert d["conclusive"] is False and "non-conclusive" in d["label"]


def test_dg_operators_small_d():
    ops = doty_giaquinto_operators(1)
    k = ops["K"].to_numpy(0.5)
    assert np.allclose(np.diag(k), [0.5, 2.0])
    k2 = np.diag(doty_giaquinto_operators(2)["K"].to_numpy(0.5)).real
    assert sorted(k2) == sorted([0.25, 1, 1, 4])
    assert "K(x)K" in COPRODUCT_CONVENTION


@pytest.mark.parametrize("d", [1, 2, 3])
def test_dg_exact(d):
    res = doty_giaquinto_check(d)
    assert all(res[k]["pass"] for k in "abcd")


def test_dg_numeric_d3():
    res = doty_giaquinto_check(3, 0.7)
    assert all(res[k]["residual"] < 1e-12 for k in "abcd")


def test_dg_detects_wrong_minimal_polynomial():
    # Dropping one factor must leave a nonzero product.
    ops = doty_giaquinto_operators(2)
    k = ops["K"].to_numpy(0.7)
    prod = (k - 0.7**2 * np.eye(4)) @ (k - np.eye(4))
    assert np.linalg.norm(prod) > 0.1
