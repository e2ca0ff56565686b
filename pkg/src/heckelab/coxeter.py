"""Finite and affine symmetric groups in window notation.

A permutation ``w`` of rank ``r`` is stored by its window ``(w(1), ..., w(r))``.
Finite permutations permute ``1..r``.  Affine permutations are bijections of
the integers with ``w(i + r) = w(i) + r``; the window entries are then
pairwise distinct modulo ``r``.

Affine windows summing to ``r(r+1)/2`` form the Coxeter group generated by
``s_0, ..., s_{r-1}``.  Other windows belong to the extended group, which
also contains the rotation ``pi: i -> i + 1`` of length zero; every extended
element factors uniquely as ``u * pi^k`` with ``u`` in the Coxeter part, and
``k`` is reported by :meth:`AffinePermutation.degree`.  Lattice translations
with nonzero coordinate sum (needed for the Bernstein generators) live there.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterator, Sequence, Union

__all__ = [
    "FinitePermutation",
    "AffinePermutation",
    "Permutation",
    "compose",
    "length",
    "reduced_word",
    "reduced_decomposition",
    "enumerate_up_to_length",
    "identity",
    "generator",
    "from_word",
    "bfs_lengths",
    "parse_window",
    "format_word",
    "parse_word",
]

FINITE = "finite"
AFFINE = "affine"


class _PermBase:
    __slots__ = ("window", "_hash")
    kind = ""

    def __init__(self, window: Sequence[int]):
        self.window = tuple(int(x) for x in window)
        self._hash = hash((self.kind, self.window))
        self._validate()

    def _validate(self):  # pragma: no cover - overridden
        raise NotImplementedError

    @property
    def rank(self) -> int:
        return len(self.window)

    def __eq__(self, other):
        return type(other) is type(self) and other.window == self.window

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        # Deterministic ordering for printing and canonical reports.
        return (self.length(), self.window) < (other.length(), other.window)

    def __repr__(self):
        return f"{type(self).__name__}({list(self.window)})"

    def __str__(self):
        return "[" + ",".join(str(x) for x in self.window) + "]"

    def __mul__(self, other):
        return compose(self, other)

    def length(self) -> int:
        return _length(self)

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.rank + 1))


class FinitePermutation(_PermBase):
    """A permutation of ``{1, ..., r}``; generators ``s_1, ..., s_{r-1}``."""

    __slots__ = ()
    kind = FINITE

    def _validate(self):
        if sorted(self.window) != list(range(1, len(self.window) + 1)):
            raise ValueError(f"window {list(self.window)} is not a permutation of 1..{len(self.window)}")

    @property
    def generator_indices(self) -> range:
        return range(1, self.rank)

    def __call__(self, i: int) -> int:
        return self.window[i - 1]

    def inverse(self) -> "FinitePermutation":
        inv = [0] * self.rank
        for pos, val in enumerate(self.window, start=1):
            inv[val - 1] = pos
        return FinitePermutation(inv)

    def left_mul_gen(self, i: int) -> "FinitePermutation":
        """``s_i * self``: swap the values ``i`` and ``i + 1``."""
        _check_index(self, i)
        return FinitePermutation(i + 1 if x == i else i if x == i + 1 else x for x in self.window)

    def right_mul_gen(self, i: int) -> "FinitePermutation":
        """``self * s_i``: swap the entries in positions ``i`` and ``i + 1``."""
        _check_index(self, i)
        w = list(self.window)
        w[i - 1], w[i] = w[i], w[i - 1]
        return FinitePermutation(w)

    def has_right_descent(self, i: int) -> bool:
        return self.window[i - 1] > self.window[i]

    def has_left_descent(self, i: int) -> bool:
        return self.window.index(i) > self.window.index(i + 1)

    def degree(self) -> int:
        return 0


class AffinePermutation(_PermBase):
    """An element of the (extended) affine symmetric group of rank ``r``."""

    __slots__ = ()
    kind = AFFINE

    def _validate(self):
        r = len(self.window)
        if r < 2:
            raise ValueError("affine permutations need rank >= 2")
        if len({x % r for x in self.window}) != r:
            raise ValueError(f"window {list(self.window)} entries are not distinct modulo {r}")
        if (sum(self.window) - r * (r + 1) // 2) % r:
            raise ValueError(f"window {list(self.window)} has an impossible sum")

    @property
    def generator_indices(self) -> range:
        return range(0, self.rank)

    def degree(self) -> int:
        """The power of the rotation ``pi``; zero exactly on the Coxeter part."""
        r = self.rank
        return (sum(self.window) - r * (r + 1) // 2) // r

    @property
    def is_normalized(self) -> bool:
        return self.degree() == 0

    def __call__(self, i: int) -> int:
        r = self.rank
        q, m = divmod(i - 1, r)
        return self.window[m] + q * r

    def inverse(self) -> "AffinePermutation":
        r = self.rank
        inv = [0] * r
        for i, x in enumerate(self.window, start=1):
            q, m = divmod(x - 1, r)
            inv[m] = i - q * r
        return AffinePermutation(inv)

    def left_mul_gen(self, i: int) -> "AffinePermutation":
        """``s_i * self``: values congruent to ``i`` go up by one, to ``i + 1`` down by one."""
        _check_index(self, i)
        r = self.rank
        a, b = i % r, (i + 1) % r
        return AffinePermutation(x + 1 if x % r == a else x - 1 if x % r == b else x for x in self.window)

    def right_mul_gen(self, i: int) -> "AffinePermutation":
        _check_index(self, i)
        w = list(self.window)
        if i == 0:
            r = self.rank
            w[0], w[-1] = w[-1] - r, w[0] + r
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        return AffinePermutation(w)

    def rotate(self, k: int) -> "AffinePermutation":
        """``pi^k * self``."""
        return AffinePermutation(x + k for x in self.window)

    def has_right_descent(self, i: int) -> bool:
        if i == 0:
            return self.window[-1] - self.rank > self.window[0]
        return self.window[i - 1] > self.window[i]

    def has_left_descent(self, i: int) -> bool:
        return self.inverse().has_right_descent(i)


Permutation = Union[FinitePermutation, AffinePermutation]


def _check_index(w: _PermBase, i: int):
    if i not in w.generator_indices:
        raise ValueError(f"generator index {i} out of range for {w.kind} rank {w.rank}")


def _cls(kind: str):
    if kind == FINITE:
        return FinitePermutation
    if kind == AFFINE:
        return AffinePermutation
    raise ValueError(f"unknown group kind {kind!r}; expected 'finite' or 'affine'")


def identity(kind: str, r: int) -> Permutation:
    return _cls(kind)(range(1, r + 1))


def generator(kind: str, r: int, i: int) -> Permutation:
    return identity(kind, r).left_mul_gen(i)


def rotation(r: int, k: int = 1) -> AffinePermutation:
    return AffinePermutation(range(1 + k, r + 1 + k))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """``(a * b)(i) = a(b(i))``."""
    if type(a) is not type(b):
        raise TypeError("cannot compose a finite with an affine permutation")
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    return type(a)(a(x) for x in b.window)


def left_descents(w: Permutation) -> list[int]:
    inv = w.inverse()
    return [i for i in w.generator_indices if inv.has_right_descent(i)]


@lru_cache(maxsize=1 << 18)
def _peel(w: Permutation) -> tuple[tuple[int, ...], int]:
    letters = []
    cur = w
    while True:
        ds = left_descents(cur)
        if not ds:
            break
        letters.append(ds[0])
        cur = cur.left_mul_gen(ds[0])
    return tuple(letters), cur.degree()


def _length(w: Permutation) -> int:
    return len(_peel(w)[0])


def length(w: Permutation) -> int:
    """Coxeter length, by peeling the smallest left descent until none is left."""
    return _length(w)


def reduced_decomposition(w: Permutation) -> tuple[list[int], int]:
    """Return ``(letters, k)`` with ``w = s_{letters[0]} ... s_{letters[-1]} * pi^k``."""
    letters, k = _peel(w)
    return list(letters), k


def reduced_word(w: Permutation) -> list[int]:
    """A reduced word for ``w`` (smallest left descent first)."""
    letters, k = _peel(w)
    if k:
        raise ValueError(f"{w} lies outside the Coxeter group (rotation degree {k}); use reduced_decomposition")
    return list(letters)


def from_word(kind: str, r: int, letters: Sequence[int], rotation_power: int = 0) -> Permutation:
    w = identity(kind, r)
    if rotation_power:
        w = rotation(r, rotation_power)
    for i in reversed(list(letters)):
        w = w.left_mul_gen(i)
    return w


def enumerate_up_to_length(kind: str, r: int, L: int) -> list[Permutation]:
    """All Coxeter-group elements of length ``<= L``, by breadth-first search."""
    if L < 0:
        raise ValueError("L must be nonnegative")
    return list(bfs_lengths(kind, r, L))


def bfs_lengths(kind: str, r: int, L: int) -> dict[Permutation, int]:
    """Map each element within Cayley-graph distance ``L`` of the identity to that distance."""
    e = identity(kind, r)
    dist = {e: 0}
    queue = deque([e])
    while queue:
        w = queue.popleft()
        d = dist[w]
        if d == L:
            continue
        for i in w.generator_indices:
            u = w.right_mul_gen(i)
            if u not in dist:
                dist[u] = d + 1
                queue.append(u)
    return dist


def iter_group(kind: str, r: int, L: int | None = None) -> Iterator[Permutation]:
    """Iterate over S_r (``L`` ignored) or the affine elements of length ``<= L``."""
    if kind == FINITE:
        yield from bfs_lengths(FINITE, r, r * (r - 1) // 2)
    else:
        if L is None:
            raise ValueError("affine enumeration needs a length bound")
        yield from bfs_lengths(AFFINE, r, L)


# -- text formats --------------------------------------------------------------


def parse_window(text: str, kind: str = FINITE) -> Permutation:
    body = text.strip().strip("[]()")
    entries = [int(x) for x in body.replace(" ", "").split(",") if x]
    return _cls(kind)(entries)


def format_word(letters: Sequence[int], rotation_power: int = 0) -> str:
    parts = [f"s{i}" for i in letters]
    if rotation_power:
        parts.append(f"pi^{rotation_power}")
    return " ".join(parts)


def parse_word(text: str) -> tuple[list[int], int]:
    """Parse ``"s1 s2 s1"`` (optionally ending in ``pi^k``) into ``(letters, k)``."""
    letters, k = [], 0
    for tok in text.replace(",", " ").split():
        if tok.startswith("pi"):
            k += int(tok[3:]) if tok.startswith("pi^") else 1
        elif tok.startswith("s") and tok[1:].lstrip("-").isdigit():
            letters.append(int(tok[1:]))
        elif tok.isdigit():
            letters.append(int(tok))
        else:
            raise ValueError(f"bad word token {tok!r}")
    return letters, k
