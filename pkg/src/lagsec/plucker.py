"""Symplectic form, the contraction map and the linear Plucker relations.

Two coefficient conventions are supported:

``plain``
    every form value and every relation coefficient is ``1`` (the
    coordinate formula taken literally, sorted indices identified);
``signed``
    the antisymmetric form with the Koszul sign ``(-1)**(s+t-1)``, where
    ``s < t`` are the 1-based positions of the contracted dual pair.

``plain`` is the default everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .combinatorics import (
    InvalidArgument,
    check_index,
    dual,
    enumerate_indices,
    rank_index,
)
from .linalg import SparseIntMatrix, check_characteristic

PLAIN = "plain"
SIGNED = "signed"
CONVENTIONS = (PLAIN, SIGNED)
N_MAX = 8


def check_convention(conv: str) -> str:
    if conv not in CONVENTIONS:
        raise InvalidArgument(f"unknown convention {conv!r}; expected one of {CONVENTIONS}")
    return conv


def form_eval(i: int, j: int, n: int, conv: str = PLAIN) -> int:
    check_convention(conv)
    if not (1 <= i <= 2 * n and 1 <= j <= 2 * n):
        raise InvalidArgument(f"basis indices ({i}, {j}) outside 1..{2 * n}")
    if i + j != 2 * n + 1:
        return 0
    if conv == PLAIN or i < j:
        return 1
    return -1


def _pair_sign(s: int, t: int, conv: str) -> int:
    if conv == PLAIN:
        return 1
    return -1 if (s + t - 1) % 2 else 1


@dataclass
class Tensor:
    """Element of the degree-``degree`` exterior power of a 2n-dim space.

    ``coords`` maps sorted indices to exact scalars; with ``char > 0`` they
    are kept reduced into ``range(char)``.
    """

    degree: int
    n: int
    coords: dict = field(default_factory=dict)
    char: int = 0

    def __post_init__(self):
        check_characteristic(self.char)
        clean = {}
        for alpha, v in self.coords.items():
            alpha = check_index(alpha, 2 * self.n, self.degree)
            v = v % self.char if self.char else v
            if v:
                clean[alpha] = v
        self.coords = clean

    @classmethod
    def basis(cls, alpha, n: int, char: int = 0) -> "Tensor":
        return cls(len(alpha), n, {tuple(alpha): 1}, char)

    def is_zero(self) -> bool:
        return not self.coords

    def __getitem__(self, alpha):
        return self.coords.get(tuple(alpha), 0)

    def _combine(self, other: "Tensor", a=1, b=1) -> "Tensor":
        if (self.degree, self.n, self.char) != (other.degree, other.n, other.char):
            raise InvalidArgument("tensors live in different spaces")
        out = {k: a * v for k, v in self.coords.items()}
        for k, v in other.coords.items():
            out[k] = out.get(k, 0) + b * v
        return Tensor(self.degree, self.n, out, self.char)

    def __add__(self, other):
        return self._combine(other)

    def __sub__(self, other):
        return self._combine(other, 1, -1)

    def scale(self, a) -> "Tensor":
        return Tensor(self.degree, self.n, {k: a * v for k, v in self.coords.items()}, self.char)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.degree, self.n, self.char, self.coords) == (
            other.degree, other.n, other.char, other.coords)


def contract_basis(alpha, n: int, conv: str = PLAIN) -> list:
    """Image of the basis tensor ``e_alpha``: list of (index, coefficient)."""
    check_convention(conv)
    alpha = check_index(alpha, 2 * n)
    pos = {a: s for s, a in enumerate(alpha, start=1)}
    out = []
    for a in alpha:
        b = dual(a, n)
        if a < b and b in pos:
            s, t = pos[a], pos[b]
            rest = tuple(x for x in alpha if x != a and x != b)
            out.append((rest, _pair_sign(s, t, conv)))
    return out


def contract_tensor(w: Tensor, conv: str = PLAIN) -> Tensor:
    if w.degree != w.n:
        raise InvalidArgument(f"expected a degree-{w.n} tensor, got degree {w.degree}")
    out: dict = {}
    for alpha, v in w.coords.items():
        for beta, c in contract_basis(alpha, w.n, conv):
            out[beta] = out.get(beta, 0) + c * v
    return Tensor(w.n - 2, w.n, out, w.char)


@dataclass(frozen=True)
class PluckerRelation:
    pivot: tuple
    terms: tuple  # ((index, coefficient), ...) ordered by i = 1..n

    def __len__(self):
        return len(self.terms)


def build_relation(pivot, n: int, conv: str = PLAIN) -> PluckerRelation:
    """The linear relation attached to a degree n-2 ``pivot``.

    One term for each ``i`` in 1..n whose dual pair misses the pivot; the
    term's variable is the sorted union of pivot and pair.
    """
    check_convention(conv)
    pivot = check_index(pivot, 2 * n, n - 2)
    support = set(pivot)
    terms = []
    for i in range(1, n + 1):
        j = dual(i, n)
        if i in support or j in support:
            continue
        gamma = tuple(sorted(support | {i, j}))
        s = gamma.index(i) + 1
        t = gamma.index(j) + 1
        terms.append((gamma, _pair_sign(s, t, conv)))
    return PluckerRelation(pivot, tuple(terms))


def evaluate_relation(rel: PluckerRelation, coords, char: int = 0):
    """Value of the relation at Plucker coordinates ``coords`` (a mapping)."""
    val = sum(c * coords.get(gamma, 0) for gamma, c in rel.terms)
    return val % char if char else val


def check_n(n: int, n_max: int = N_MAX) -> int:
    if not 2 <= n <= n_max:
        raise InvalidArgument(f"n must lie in 2..{n_max}, got {n}")
    return n


def build_matrix(n: int, conv: str = PLAIN, n_max: int = N_MAX) -> SparseIntMatrix:
    """The C(2n, n-2) x C(2n, n) relation matrix, lexicographic rows/cols."""
    check_n(n, n_max)
    check_convention(conv)
    entries = []
    for r, pivot in enumerate(enumerate_indices(n - 2, 2 * n)):
        for gamma, c in build_relation(pivot, n, conv).terms:
            entries.append((r, rank_index(gamma, n, 2 * n), c))
    return SparseIntMatrix(comb(2 * n, n - 2), comb(2 * n, n), entries)
