"""Index sets I(l, m) and the dual-pair classification of degree n-2 indices.

Indices are plain tuples of strictly increasing 1-based integers.  The dual
of ``i`` in ``{1..2n}`` is ``2n + 1 - i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb


class InvalidArgument(ValueError):
    """Raised for out-of-range or malformed inputs."""


Index = tuple  # strictly increasing tuple of ints in 1..m


def check_index(alpha, m: int, ell: int | None = None) -> tuple:
    alpha = tuple(int(a) for a in alpha)
    if ell is not None and len(alpha) != ell:
        raise InvalidArgument(f"index {alpha} has length {len(alpha)}, expected {ell}")
    for a, b in zip(alpha, alpha[1:]):
        if a >= b:
            raise InvalidArgument(f"index {alpha} is not strictly increasing")
    if alpha and (alpha[0] < 1 or alpha[-1] > m):
        raise InvalidArgument(f"index {alpha} not contained in 1..{m}")
    return alpha


def enumerate_indices(ell: int, m: int) -> list[tuple]:
    """All of I(ell, m) in lexicographic order."""
    if ell < 0 or m < 0 or ell > m:
        raise InvalidArgument(f"need 0 <= ell <= m, got ell={ell}, m={m}")
    return list(combinations(range(1, m + 1), ell))


def rank_index(alpha, ell: int, m: int) -> int:
    """Lexicographic rank of ``alpha`` within I(ell, m)."""
    alpha = check_index(alpha, m, ell)
    r = 0
    prev = 0
    for pos, a in enumerate(alpha):
        left = ell - pos - 1
        # count indices whose element at `pos` is smaller than `a`
        for v in range(prev + 1, a):
            r += comb(m - v, left)
        prev = a
    return r


def unrank_index(r: int, ell: int, m: int) -> tuple:
    total = comb(m, ell) if 0 <= ell <= m else 0
    if not 0 <= r < total:
        raise InvalidArgument(f"rank {r} out of range [0, {total})")
    out = []
    v = 1
    for pos in range(ell):
        left = ell - pos - 1
        while True:
            c = comb(m - v, left)
            if r < c:
                break
            r -= c
            v += 1
        out.append(v)
        v += 1
    return tuple(out)


def dual(i: int, n: int) -> int:
    return 2 * n + 1 - i


def format_index(alpha) -> str:
    """Compact label, writing 10, 11, 12, ... as A, B, C, ..."""
    digits = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"
    if all(a < len(digits) for a in alpha):
        return "".join(digits[a] for a in alpha)
    return ",".join(str(a) for a in alpha)


@dataclass(frozen=True)
class DualPairProfile:
    n: int
    pairs: tuple  # sorted tuple of (i, 2n+1-i) with i <= n
    free: tuple   # sorted tuple of unpaired elements

    @property
    def k(self) -> int:
        return len(self.pairs)


def dual_pair_profile(alpha, n: int) -> DualPairProfile:
    alpha = check_index(alpha, 2 * n)
    support = set(alpha)
    pairs = tuple((a, dual(a, n)) for a in alpha if a <= n and dual(a, n) in support)
    paired = {x for p in pairs for x in p}
    free = tuple(a for a in alpha if a not in paired)
    return DualPairProfile(n, pairs, free)


def partition_class(alpha, n: int) -> tuple:
    """Class key ``(k, free)`` of a degree n-2 index.

    Two pivots share a class iff they have the same free part; ``k`` is
    the number of dual pairs they contain.
    """
    if n < 2:
        raise InvalidArgument(f"n must be >= 2, got {n}")
    alpha = check_index(alpha, 2 * n, n - 2)
    prof = dual_pair_profile(alpha, n)
    return (prof.k, prof.free)


def partition_classes(n: int) -> dict:
    """Map each class key to its member indices (lex order throughout)."""
    classes: dict = {}
    for alpha in enumerate_indices(n - 2, 2 * n):
        classes.setdefault(partition_class(alpha, n), []).append(alpha)
    return classes


def partition_census(n: int) -> dict:
    """``{k: (number of classes, number of indices)}`` for I(n-2, 2n)."""
    census: dict = {}
    for (k, _free), members in partition_classes(n).items():
        nc, ni = census.get(k, (0, 0))
        census[k] = (nc + 1, ni + len(members))
    return dict(sorted(census.items(), reverse=True))
