"""Independent reference computations used by the tests."""

from __future__ import annotations

from heckelab.coxeter import FINITE, bfs_lengths, compose, generator, identity, length, reduced_word
from heckelab.laurent import ONE, LaurentPoly

Q = LaurentPoly.monomial(-2)


def right_gen_matrix(n: int, i: int) -> dict:
    """Sparse matrix of ``x -> x T_{s_i}`` on the basis ``{T_w}`` of H(v, S_n).

    Built from the right-handed rule ``T_w T_s = T_{ws}`` when ``l(ws) > l(w)``
    and ``(q - 1) T_w + q T_{ws}`` otherwise (``q = v^-2``).
    """
    s = generator(FINITE, n, i)
    cols = {}
    for w in bfs_lengths(FINITE, n, n * (n - 1) // 2):
        ws = compose(w, s)
        if length(ws) > length(w):
            cols[w] = {ws: ONE}
        else:
            cols[w] = {w: Q - 1, ws: Q}
    return cols


def apply(cols: dict, vec: dict) -> dict:
    out: dict = {}
    for w, c in vec.items():
        for u, a in cols[w].items():
            out[u] = out.get(u, LaurentPoly()) + a * c
    return {u: c for u, c in out.items() if c}


def oracle_product(n: int, a, b, mats: dict) -> dict:
    """``T_a T_b`` by right-multiplying ``T_e`` along reduced words of ``a`` then ``b``."""
    vec = {identity(FINITE, n): ONE}
    for i in reduced_word(a) + reduced_word(b):
        vec = apply(mats[i], vec)
    return vec


def hook_free_syt_count(shape) -> int:
    """Standard Young tableaux by brute-force filling (placing n, n-1, ... in corners)."""
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def count(rows: tuple) -> int:
        if sum(rows) == 0:
            return 1
        total = 0
        for k, r in enumerate(rows):
            if r and (k + 1 == len(rows) or rows[k + 1] < r):
                total += count(rows[:k] + (r - 1,) + rows[k + 1 :])
        return total

    return count(tuple(shape))
