"""Rank reports: one row per characteristic, rendered as text or JSON."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from math import comb

from .blocks import blockwise_rank, decompose
from .linalg import check_characteristic
from .plucker import PLAIN, build_matrix, check_convention, check_n


def shape_key(shape) -> str:
    return f"{shape[0]}x{shape[1]}"


@dataclass
class RankRow:
    char: int
    rank: int
    nullity: int
    codimension: int  # of P(ker f) in P(wedge^n E); equals the rank
    surjective: bool
    blocks: dict  # "RxC" -> list of component ranks

    def as_dict(self) -> dict:
        return {
            "char": self.char,
            "rank": self.rank,
            "nullity": self.nullity,
            "codimension": self.codimension,
            "surjective": self.surjective,
            "blocks": self.blocks,
        }


@dataclass
class RankReport:
    n: int
    convention: str
    rows_dim: int  # C(2n, n-2)
    cols_dim: int  # C(2n, n)
    table: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "convention": self.convention,
            "ambient": {"rows": self.rows_dim, "cols": self.cols_dim},
            "table": [r.as_dict() for r in self.table],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict()) + "\n"


def compress_blocks(blocks: dict) -> str:
    """``{"4x6": [4, 4, 3]}`` -> ``"4x6=4*2,3*1"``; shapes joined by ``;``."""
    parts = []
    for shape, ranks in blocks.items():
        counts = sorted(Counter(ranks).items(), key=lambda kv: -kv[0])
        parts.append(shape + "=" + ",".join(f"{r}*{k}" for r, k in counts))
    return ";".join(parts)


TEXT_COLUMNS = ("char", "rank", "nullity", "codimension", "surjective", "blocks")


def format_text(report: RankReport) -> str:
    lines = [
        f"# n={report.n} convention={report.convention} "
        f"rows={report.rows_dim} cols={report.cols_dim}",
        "\t".join(TEXT_COLUMNS),
    ]
    for r in report.table:
        lines.append("\t".join([
            str(r.char), str(r.rank), str(r.nullity), str(r.codimension),
            "yes" if r.surjective else "no", compress_blocks(r.blocks),
        ]))
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> list:
    """Inverse of the table body of :func:`format_text` (for consistency checks)."""
    rows = []
    for ln in text.splitlines():
        if not ln or ln.startswith("#") or ln.startswith("char\t"):
            continue
        ch, rk, nl, cd, sj, bl = ln.split("\t")
        rows.append({
            "char": int(ch), "rank": int(rk), "nullity": int(nl),
            "codimension": int(cd), "surjective": sj == "yes", "blocks": bl,
        })
    return rows


def rank_report(n: int, chars, convention: str = PLAIN, n_max: int = 8) -> RankReport:
    check_n(n, n_max)
    check_convention(convention)
    chars = [check_characteristic(c) for c in chars]
    B = build_matrix(n, convention, n_max)
    dec = decompose(B)
    report = RankReport(n, convention, comb(2 * n, n - 2), comb(2 * n, n))
    for c in chars:
        br = blockwise_rank(B, c, dec)
        report.table.append(RankRow(
            char=c,
            rank=br.rank,
            nullity=report.cols_dim - br.rank,
            codimension=br.rank,
            surjective=br.rank == report.rows_dim,
            blocks={shape_key(s): ranks for s, ranks in br.by_shape.items()},
        ))
    return report
