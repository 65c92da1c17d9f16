"""Matrix Market and CSV export/import for SparseIntMatrix (1-based on disk)."""

from __future__ import annotations

from .combinatorics import InvalidArgument
from .linalg import SparseIntMatrix

MTX_HEADER = "%%MatrixMarket matrix coordinate integer general"
CSV_HEADER = "row,col,value"
FORMATS = ("mtx", "csv")


def format_mtx(M: SparseIntMatrix) -> str:
    lines = [MTX_HEADER, f"{M.nrows} {M.ncols} {M.nnz}"]
    lines += [f"{r + 1} {c + 1} {v}" for r, c, v in M.entries]
    return "\n".join(lines) + "\n"


def format_csv(M: SparseIntMatrix) -> str:
    lines = [CSV_HEADER] + [f"{r + 1},{c + 1},{v}" for r, c, v in M.entries]
    return "\n".join(lines) + "\n"


def format_matrix(M: SparseIntMatrix, fmt: str) -> str:
    if fmt == "mtx":
        return format_mtx(M)
    if fmt == "csv":
        return format_csv(M)
    raise InvalidArgument(f"unknown format {fmt!r}; expected one of {FORMATS}")


def parse_mtx(text: str) -> SparseIntMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != MTX_HEADER:
        raise InvalidArgument("missing Matrix Market header")
    body = [ln for ln in lines[1:] if not ln.startswith("%")]
    nrows, ncols, nnz = (int(x) for x in body[0].split())
    entries = []
    for ln in body[1:]:
        r, c, v = (int(x) for x in ln.split())
        entries.append((r - 1, c - 1, v))
    if len(entries) != nnz:
        raise InvalidArgument(f"expected {nnz} entries, found {len(entries)}")
    return SparseIntMatrix(nrows, ncols, entries)


def parse_csv(text: str, nrows: int, ncols: int) -> SparseIntMatrix:
    """CSV carries no shape, so the caller supplies it."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if lines and lines[0].strip() == CSV_HEADER:
        lines = lines[1:]
    entries = []
    for ln in lines:
        r, c, v = (int(x) for x in ln.split(","))
        entries.append((r - 1, c - 1, v))
    return SparseIntMatrix(nrows, ncols, entries)
