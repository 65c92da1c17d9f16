"""Lagrangian subspaces over GF(p), their Plucker coordinates, and the kernel check."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .combinatorics import InvalidArgument, enumerate_indices
from .linalg import is_prime, rank_mod_p
from .plucker import PLAIN, Tensor, build_relation, check_convention, contract_tensor

DEFAULT_STEPS = 40


@dataclass
class SubspaceBasis:
    n: int
    p: int
    rows: list  # n lists of length 2n, entries in range(p)

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidArgument(f"{self.p} is not prime")
        self.rows = [[int(x) % self.p for x in r] for r in self.rows]
        if any(len(r) != 2 * self.n for r in self.rows):
            raise InvalidArgument(f"rows must have length {2 * self.n}")


def omega(x, y, n: int, p: int) -> int:
    """Signed symplectic form: <e_i, e_{2n+1-i}> = 1 for i <= n, -1 otherwise."""
    s = 0
    for i in range(n):
        j = 2 * n - 1 - i
        s += x[i] * y[j] - x[j] * y[i]
    return s % p


def gram(W: SubspaceBasis) -> list:
    return [[omega(u, v, W.n, W.p) for v in W.rows] for u in W.rows]


def is_isotropic(W: SubspaceBasis) -> bool:
    return all(v == 0 for row in gram(W) for v in row)


def coordinate_subspace(support, n: int, p: int) -> SubspaceBasis:
    """Span of the standard basis vectors e_i, i in ``support`` (1-based)."""
    rows = []
    for i in support:
        v = [0] * (2 * n)
        v[i - 1] = 1
        rows.append(v)
    return SubspaceBasis(n, p, rows)


def standard_lagrangian(n: int, p: int) -> SubspaceBasis:
    return coordinate_subspace(range(1, n + 1), n, p)


def transvect(x, v, lam: int, n: int, p: int) -> list:
    """x -> x + lam * omega(x, v) * v."""
    f = lam * omega(x, v, n, p) % p
    return [(a + f * b) % p for a, b in zip(x, v)]


def random_lagrangian(n: int, p: int, seed: int = 0, steps: int = DEFAULT_STEPS) -> SubspaceBasis:
    """Standard Lagrangian moved by ``steps`` random symplectic transvections.

    Randomness comes from ``random.Random(seed)`` (Mersenne Twister).
    """
    if steps < 0:
        raise InvalidArgument("steps must be >= 0")
    W = standard_lagrangian(n, p)
    rng = random.Random(seed)
    rows = W.rows
    for _ in range(steps):
        v = [rng.randrange(p) for _ in range(2 * n)]
        lam = rng.randrange(1, p)
        rows = [transvect(x, v, lam, n, p) for x in rows]
    return SubspaceBasis(n, p, rows)


def plucker_coordinates(W: SubspaceBasis) -> Tensor:
    """All n x n minors of the basis matrix, keyed by column index (1-based).

    Minors are built row by row: the minor on rows ``0..k-1`` and column set
    ``S`` is the Laplace expansion along row ``k-1`` of the minors on rows
    ``0..k-2``.
    """
    n, p, rows = W.n, W.p, W.rows
    if rank_mod_p(rows, p) < n:
        raise InvalidArgument("basis rows are linearly dependent")
    minors = {(): 1}
    for k in range(1, n + 1):
        row = rows[k - 1]
        nxt = {}
        for S in enumerate_indices(k, 2 * n):
            acc = 0
            for q, col in enumerate(S):
                a = row[col - 1]
                if a:
                    sub = minors.get(S[:q] + S[q + 1:], 0)
                    if sub:
                        acc += a * sub if (k - 1 + q) % 2 == 0 else -a * sub
            acc %= p
            if acc:
                nxt[S] = acc
        minors = nxt
    return Tensor(n, n, minors, p)


def kernel_residual(W: SubspaceBasis, conv: str = PLAIN) -> Tensor:
    """Image of the Plucker vector of ``W`` under the contraction map."""
    return contract_tensor(plucker_coordinates(W), conv)


def verify_kernel_membership(W: SubspaceBasis, conv: str = PLAIN) -> bool:
    """True iff every linear relation vanishes at the Plucker coordinates of ``W``."""
    check_convention(conv)
    coords = plucker_coordinates(W)
    for pivot in enumerate_indices(W.n - 2, 2 * W.n):
        rel = build_relation(pivot, W.n, conv)
        if sum(c * coords[g] for g, c in rel.terms) % W.p:
            return False
    return True


def break_isotropy(W: SubspaceBasis, row: int = 0, seed: int = 0) -> SubspaceBasis:
    """Replace one basis row so the span has full rank and is not isotropic."""
    rng = random.Random(seed)
    n, p = W.n, W.p
    while True:
        v = [rng.randrange(p) for _ in range(2 * n)]
        rows = [list(r) for r in W.rows]
        rows[row] = v
        if rank_mod_p(rows, p) < n:
            continue
        cand = SubspaceBasis(n, p, rows)
        if not is_isotropic(cand):
            return cand
