"""The three block shapes of the n = 6 relation matrix, as displayed matrices."""

from .linalg import SparseIntMatrix

L4_ROWS = (
    "11110000000000000000",
    "10001110000000000000",
    "01001001100000000000",
    "00100101010000000000",
    "00010010110000000000",
    "10000000001110000000",
    "01000000001001100000",
    "00100000000101010000",
    "00010000000010110000",
    "00001000001000001100",
    "00000100000100001010",
    "00000010000010000110",
    "00000001000001001001",
    "00000000100000100101",
    "00000000010000010011",
)

L3_ROWS = (
    "111000",
    "100110",
    "010101",
    "001011",
)

L2_ROWS = ("11",)


def _parse(rows) -> SparseIntMatrix:
    return SparseIntMatrix.from_dense([[int(ch) for ch in r] for r in rows])


L4 = _parse(L4_ROWS)
L3 = _parse(L3_ROWS)
L2 = _parse(L2_ROWS)

TEMPLATES = {"L4": L4, "L3": L3, "L2": L2}
