"""Exact rank of small-integer sparse matrices over GF(p) and over Q.

No floating point is used anywhere.  Characteristic-zero ranks use
fraction-free integer elimination: Bareiss on dense matrices with at most
``DENSE_MAX_COLS`` columns, and content-reduced integer row elimination on
the sparse path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .combinatorics import InvalidArgument

DENSE_MAX_COLS = 64


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_characteristic(c: int) -> int:
    c = int(c)
    if c != 0 and not is_prime(c):
        raise InvalidArgument(f"characteristic must be 0 or a prime, got {c}")
    return c


@dataclass
class SparseIntMatrix:
    """Coordinate-list integer matrix; rows and columns are 0-based."""

    nrows: int
    ncols: int
    entries: list = field(default_factory=list)  # (row, col, value), sorted

    def __post_init__(self):
        seen = {}
        for r, c, v in self.entries:
            if not (0 <= r < self.nrows and 0 <= c < self.ncols):
                raise InvalidArgument(f"entry ({r}, {c}) outside {self.nrows}x{self.ncols}")
            if (r, c) in seen:
                raise InvalidArgument(f"duplicate entry at ({r}, {c})")
            if v == 0:
                continue
            seen[(r, c)] = int(v)
        self.entries = sorted((r, c, v) for (r, c), v in seen.items())

    @classmethod
    def from_dense(cls, rows) -> "SparseIntMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        ents = [(i, j, v) for i, r in enumerate(rows) for j, v in enumerate(r) if v]
        return cls(len(rows), ncols, ents)

    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def to_dense(self) -> list:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for r, c, v in self.entries:
            out[r][c] = v
        return out

    def row_dicts(self) -> list:
        rows = [dict() for _ in range(self.nrows)]
        for r, c, v in self.entries:
            rows[r][c] = v
        return rows

    def submatrix(self, rows, cols) -> "SparseIntMatrix":
        rmap = {r: i for i, r in enumerate(rows)}
        cmap = {c: j for j, c in enumerate(cols)}
        ents = [(rmap[r], cmap[c], v) for r, c, v in self.entries
                if r in rmap and c in cmap]
        return SparseIntMatrix(len(rmap), len(cmap), ents)

    def permuted(self, row_perm, col_perm) -> "SparseIntMatrix":
        """Entry (r, c) moves to (row_perm[r], col_perm[c])."""
        ents = [(row_perm[r], col_perm[c], v) for r, c, v in self.entries]
        return SparseIntMatrix(self.nrows, self.ncols, ents)

    def __eq__(self, other):
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries


def _rows_of(M) -> list:
    if isinstance(M, SparseIntMatrix):
        return M.row_dicts()
    return [{j: int(v) for j, v in enumerate(r) if v} for r in M]


def _ncols_of(M) -> int:
    if isinstance(M, SparseIntMatrix):
        return M.ncols
    return len(M[0]) if len(M) else 0


def _dense_rank_mod_p(rows: list, ncols: int, p: int) -> int:
    A = [[0] * ncols for _ in rows]
    for i, r in enumerate(rows):
        for j, v in r.items():
            A[i][j] = v % p
    rank = 0
    m = len(A)
    for c in range(ncols):
        # sparsest candidate row as pivot
        best = None
        for i in range(rank, m):
            if A[i][c]:
                w = sum(1 for x in A[i] if x)
                if best is None or w < best[0]:
                    best = (w, i)
        if best is None:
            continue
        piv = best[1]
        A[rank], A[piv] = A[piv], A[rank]
        prow = A[rank]
        inv = pow(prow[c], -1, p)
        for i in range(rank + 1, m):
            f = A[i][c]
            if f:
                f = f * inv % p
                row = A[i]
                for j in range(c, ncols):
                    if prow[j]:
                        row[j] = (row[j] - f * prow[j]) % p
        rank += 1
        if rank == m:
            break
    return rank


def _sparse_rank_mod_p(rows: list, p: int) -> int:
    # online echelon: each stored pivot row is monic with leading column as key
    pivots: dict = {}
    order = sorted(range(len(rows)), key=lambda i: (len(rows[i]), i))
    for i in order:
        row = {j: v % p for j, v in rows[i].items() if v % p}
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                inv = pow(row[c], -1, p)
                pivots[c] = {j: v * inv % p for j, v in row.items()}
                break
            f = row[c]
            for j, v in prow.items():
                nv = (row.get(j, 0) - f * v) % p
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
    return len(pivots)


def _check_method(method: str) -> str:
    if method not in ("auto", "dense", "sparse"):
        raise InvalidArgument(f"unknown method {method!r}")
    return method


def rank_mod_p(M, p: int, method: str = "auto") -> int:
    """Rank of ``M`` with entries reduced modulo the prime ``p``.

    ``method`` forces the dense or sparse elimination; ``auto`` goes dense
    up to ``DENSE_MAX_COLS`` columns.
    """
    if not is_prime(p):
        raise InvalidArgument(f"{p} is not prime")
    _check_method(method)
    rows = _rows_of(M)
    ncols = _ncols_of(M)
    if method == "dense" or (method == "auto" and ncols <= DENSE_MAX_COLS):
        return _dense_rank_mod_p(rows, ncols, p)
    return _sparse_rank_mod_p(rows, p)


def bareiss_rank(A: list) -> int:
    """Rank of a dense integer matrix by Bareiss fraction-free elimination.

    ``A`` is modified in place.  Every division is exact.
    """
    m = len(A)
    if m == 0:
        return 0
    ncols = len(A[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(rank, m):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        prow = A[rank]
        pv = prow[c]
        ptail = prow[c + 1:]
        for i in range(rank + 1, m):
            row = A[i]
            f = row[c]
            if f:
                row[c + 1:] = [(pv * x - f * y) // prev for x, y in zip(row[c + 1:], ptail)]
                row[c] = 0
            elif pv != prev:
                row[c + 1:] = [pv * x // prev for x in row[c + 1:]]
        prev = pv
        rank += 1
        if rank == m:
            break
    return rank


def _sparse_rank_char0(rows: list) -> int:
    pivots: dict = {}
    order = sorted(range(len(rows)), key=lambda i: (len(rows[i]), i))
    for i in order:
        row = dict(rows[i])
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                pivots[c] = {j: v // g for j, v in row.items()}
                break
            a, b = prow[c], row[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {}
            for j, v in row.items():
                new[j] = a * v
            for j, v in prow.items():
                nv = new.get(j, 0) - b * v
                if nv:
                    new[j] = nv
                else:
                    new.pop(j, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
            row = {j: v // g for j, v in new.items()} if g > 1 else new
    return len(pivots)


def rank_char0(M, method: str = "auto") -> int:
    """Rank over the rationals, exact integer arithmetic only."""
    _check_method(method)
    rows = _rows_of(M)
    ncols = _ncols_of(M)
    if method == "dense" or (method == "auto" and ncols <= DENSE_MAX_COLS):
        A = [[r.get(j, 0) for j in range(ncols)] for r in rows]
        return bareiss_rank(A)
    return _sparse_rank_char0(rows)


def rank(M, char: int = 0, method: str = "auto") -> int:
    char = check_characteristic(char)
    if char == 0:
        return rank_char0(M, method)
    return rank_mod_p(M, char, method)
