"""Small numerical helpers shared by the representation-theoretic checks."""

from __future__ import annotations

import numpy as np

RANK_RTOL = 1e-9


def singular_values(a: np.ndarray) -> np.ndarray:
    if a.size == 0:
        return np.zeros(0)
    return np.linalg.svd(a, compute_uv=False)


def numerical_rank(a: np.ndarray, rtol: float = RANK_RTOL, scale: float | None = None) -> int:
    """Count singular values above ``rtol * scale``.

    ``scale`` defaults to the largest singular value.  Pass an external
    scale when the whole matrix may vanish (e.g. a degenerate Gram matrix),
    since a relative test cannot detect that.
    """
    s = singular_values(np.asarray(a))
    ref = s[0] if (scale is None and s.size) else scale
    if s.size == 0 or not ref:
        return 0
    return int(np.sum(s > rtol * ref))


def column_basis(a: np.ndarray, rtol: float = RANK_RTOL) -> np.ndarray:
    """Orthonormal basis of the column span of ``a``."""
    a = np.asarray(a)
    if a.size == 0:
        return np.zeros((a.shape[0], 0), dtype=a.dtype)
    u, s, _ = np.linalg.svd(a, full_matrices=False)
    if s.size == 0 or s[0] == 0:
        return np.zeros((a.shape[0], 0), dtype=u.dtype)
    k = int(np.sum(s > rtol * s[0]))
    return u[:, :k]


def nullspace(a: np.ndarray, rtol: float = RANK_RTOL) -> np.ndarray:
    """Orthonormal basis (columns) of the kernel of ``a``."""
    a = np.asarray(a)
    n = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(n, dtype=a.dtype)
    _, s, vh = np.linalg.svd(a, full_matrices=True)
    if s.size == 0 or s[0] == 0:
        return np.eye(n, dtype=vh.dtype)
    k = int(np.sum(s > rtol * s[0]))
    return vh[k:].conj().T


def commutant_system(mats: list[np.ndarray]) -> np.ndarray:
    """Stacked linear map ``X -> [X A - A X for A in mats]`` on row-major ``vec(X)``."""
    n = mats[0].shape[0]
    eye = np.eye(n)
    blocks = [np.kron(eye, a.T) - np.kron(a, eye) for a in mats]
    return np.vstack(blocks)


def intertwiner_system(src: list[np.ndarray], dst: list[np.ndarray]) -> np.ndarray:
    """Stacked map ``X -> [X A - B X]`` for pairs ``(A, B)``; solutions intertwine ``A`` into ``B``."""
    n, m = src[0].shape[0], dst[0].shape[0]
    blocks = [np.kron(np.eye(m), a.T) - np.kron(b, np.eye(n)) for a, b in zip(src, dst)]
    return np.vstack(blocks)


def commutant_dimension(mats: list[np.ndarray], rtol: float = RANK_RTOL) -> int:
    sys = commutant_system(mats)
    return sys.shape[1] - numerical_rank(sys, rtol)
