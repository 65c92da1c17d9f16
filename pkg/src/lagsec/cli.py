"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 bad arguments,
3 I/O failure, 4 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .blocks import blockwise_rank, decompose
from .combinatorics import InvalidArgument, format_index, partition_census, partition_classes
from .lagrangian import (
    DEFAULT_STEPS,
    break_isotropy,
    coordinate_subspace,
    is_isotropic,
    random_lagrangian,
    verify_kernel_membership,
)
from .linalg import check_characteristic, is_prime, rank
from .matrixio import FORMATS, format_matrix
from .plucker import CONVENTIONS, N_MAX, PLAIN, build_matrix
from .report import compress_blocks, format_text, rank_report, shape_key

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_GUARD = 4


class ResourceGuard(Exception):
    pass


def _chars(text: str) -> list:
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad characteristic list {text!r}")
    for v in vals:
        if v != 0 and not is_prime(v):
            raise argparse.ArgumentTypeError(f"characteristic {v} is neither 0 nor prime")
    if not vals:
        raise argparse.ArgumentTypeError("empty characteristic list")
    return vals


def _ints(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}")


def _guard(n: int, n_max: int) -> None:
    if n > n_max:
        raise ResourceGuard(f"n={n} exceeds the resource guard --n-max={n_max}")
    if n < 2:
        raise InvalidArgument(f"n must be >= 2, got {n}")


def _emit(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
        return
    with open(out, "w", newline="\n") as fh:
        fh.write(text)


def cmd_table(args) -> int:
    _guard(args.n, args.n_max)
    report = rank_report(args.n, args.chars, args.convention, args.n_max)
    _emit(report.to_json() if args.json else format_text(report), args.out)
    return EXIT_OK


def cmd_matrix(args) -> int:
    _guard(args.n, args.n_max)
    B = build_matrix(args.n, args.convention, args.n_max)
    _emit(format_matrix(B, args.format), args.out)
    return EXIT_OK


def partition_data(n: int) -> dict:
    census = partition_census(n)
    classes = partition_classes(n)
    return {
        "n": n,
        "census": [
            {"pairs": k, "classes": nc, "indices": ni} for k, (nc, ni) in census.items()
        ],
        "total": sum(ni for _, ni in census.values()),
        "class_sizes": {
            str(k): sorted({len(m) for (kk, _), m in classes.items() if kk == k})
            for k in census
        },
    }


def cmd_partition(args) -> int:
    _guard(args.n, args.n_max)
    data = partition_data(args.n)
    if args.json:
        _emit(json.dumps(data) + "\n", args.out)
        return EXIT_OK
    lines = [f"# n={args.n} indices of length {args.n - 2} in 1..{2 * args.n}",
             "pairs\tclasses\tindices"]
    for row in data["census"]:
        lines.append(f"{row['pairs']}\t{row['classes']}\t{row['indices']}")
    lines.append(f"total\t{sum(r['classes'] for r in data['census'])}\t{data['total']}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def blocks_data(n: int, convention: str, n_max: int) -> dict:
    B = build_matrix(n, convention, n_max)
    dec = decompose(B)
    return {
        "n": n,
        "convention": convention,
        "ambient": {"rows": B.nrows, "cols": B.ncols},
        "nnz": B.nnz,
        "components": {shape_key(s): k for s, k in dec.shape_counts().items()},
        "isolated_columns": len(dec.isolated_columns),
    }


def cmd_blocks(args) -> int:
    _guard(args.n, args.n_max)
    data = blocks_data(args.n, args.convention, args.n_max)
    if args.json:
        _emit(json.dumps(data) + "\n", args.out)
        return EXIT_OK
    lines = [f"# n={data['n']} convention={data['convention']} "
             f"rows={data['ambient']['rows']} cols={data['ambient']['cols']} nnz={data['nnz']}",
             "shape\tcount"]
    lines += [f"{s}\t{k}" for s, k in data["components"].items()]
    lines.append(f"isolated_columns\t{data['isolated_columns']}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def negative_control(n: int, p: int):
    """span{e_1..e_{n-1}, e_{n+2}}: contains the dual pair (n-1, n+2)."""
    return coordinate_subspace(list(range(1, n)) + [n + 2], n, p)


def verify_data(n: int, p: int, samples: int, seed: int, steps: int) -> dict:
    passes = {c: 0 for c in CONVENTIONS}
    isotropic = 0
    for s in range(samples):
        W = random_lagrangian(n, p, seed=seed + s, steps=steps)
        isotropic += is_isotropic(W)
        for c in CONVENTIONS:
            passes[c] += verify_kernel_membership(W, c)
    neg = {"fixed": negative_control(n, p),
           "broken": break_isotropy(random_lagrangian(n, p, seed=seed, steps=steps), seed=seed)}
    controls = {
        name: {c: verify_kernel_membership(W, c) for c in CONVENTIONS}
        for name, W in neg.items()
    }
    return {"n": n, "p": p, "samples": samples, "seed": seed, "steps": steps,
            "isotropic": isotropic, "passes": passes, "negative_controls": controls}


def cmd_verify(args) -> int:
    _guard(args.n, args.n_max)
    if not is_prime(args.p):
        raise InvalidArgument(f"--p must be prime, got {args.p}")
    if args.samples < 1:
        raise InvalidArgument("--samples must be >= 1")
    data = verify_data(args.n, args.p, args.samples, args.seed, args.steps)
    ok = data["passes"][args.convention] == args.samples
    data["convention"] = args.convention
    data["ok"] = ok
    if args.json:
        _emit(json.dumps(data) + "\n", args.out)
    else:
        lines = [f"# n={args.n} p={args.p} samples={args.samples} seed={args.seed} "
                 f"steps={args.steps}",
                 f"isotropic\t{data['isotropic']}/{args.samples}"]
        for c in CONVENTIONS:
            lines.append(f"kernel[{c}]\t{data['passes'][c]}/{args.samples}")
        for name, res in data["negative_controls"].items():
            for c in CONVENTIONS:
                lines.append(f"control[{name}][{c}]\t{'pass' if res[c] else 'fail'}")
        lines.append(f"result[{args.convention}]\t{'PASS' if ok else 'FAIL'}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if ok else EXIT_FAIL


def scan_data(ns, chars, convention: str, n_max: int, cross_check: bool = False) -> dict:
    for n in ns:
        _guard(n, n_max)
    rows = []
    drops = {}
    for n in ns:
        B = build_matrix(n, convention, n_max)
        dec = decompose(B)
        drops[n] = []
        for c in chars:
            t0 = time.perf_counter()
            br = blockwise_rank(B, c, dec)
            row = {"n": n, "char": c, "rank": br.rank, "rows": B.nrows,
                   "surjective": br.rank == B.nrows,
                   "blocks": compress_blocks({shape_key(s): r for s, r in br.by_shape.items()})}
            if cross_check:
                row["whole_rank"] = rank(B, c)
                if row["whole_rank"] != br.rank:
                    raise RuntimeError(f"blockwise/whole rank mismatch at n={n}, char={c}")
            row["seconds"] = round(time.perf_counter() - t0, 3)
            rows.append(row)
            if not row["surjective"]:
                drops[n].append(c)
    return {"convention": convention, "chars": list(chars), "rows": rows,
            "drops": {str(n): d for n, d in drops.items()}}


def cmd_scan(args) -> int:
    data = scan_data(args.ns, args.chars, args.convention, args.n_max, args.cross_check)
    for row in data["rows"]:
        row.pop("seconds")
    if args.json:
        _emit(json.dumps(data) + "\n", args.out)
        return EXIT_OK
    lines = [f"# convention={data['convention']}", "n\tchar\trank\trows\tsurjective\tblocks"]
    for r in data["rows"]:
        lines.append(f"{r['n']}\t{r['char']}\t{r['rank']}\t{r['rows']}\t"
                     f"{'yes' if r['surjective'] else 'no'}\t{r['blocks']}")
    for n, d in data["drops"].items():
        lines.append(f"# n={n} rank drops at chars {{{', '.join(map(str, d))}}}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lagsec",
        description="Linear section of the Lagrangian-Grassmannian: relation matrix, "
                    "block structure and exact ranks.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, n_default=6, convention=True):
        p.add_argument("--n", type=int, default=n_default, help="half-dimension of E")
        p.add_argument("--n-max", type=int, default=N_MAX, help="resource guard on n")
        if convention:
            p.add_argument("--convention", choices=CONVENTIONS, default=PLAIN)
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("table", help="rank / nullity / surjectivity per characteristic")
    common(p)
    p.add_argument("--chars", type=_chars, default=[0, 2, 3, 5])
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("matrix", help="export the relation matrix")
    common(p)
    p.add_argument("--format", choices=FORMATS, default="mtx")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("partition", help="dual-pair census of the row indices")
    common(p, convention=False)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("blocks", help="block-diagonal structure of the matrix")
    common(p)
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("verify", help="check random Lagrangians against the kernel")
    common(p)
    p.add_argument("--p", type=int, default=5, help="prime field size")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="surjectivity scan over n and characteristics")
    p.add_argument("--n", dest="ns", type=_ints, default=[6], help="comma-separated n values")
    p.add_argument("--chars", type=_chars, default=[2, 3, 5, 7, 11])
    p.add_argument("--convention", choices=CONVENTIONS, default=PLAIN)
    p.add_argument("--n-max", type=int, default=N_MAX)
    p.add_argument("--cross-check", action="store_true",
                   help="also rank the undecomposed matrix and compare")
    p.add_argument("--out", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ResourceGuard as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InvalidArgument as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
