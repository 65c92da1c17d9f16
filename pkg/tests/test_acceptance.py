"""Exit criteria. Each test records one PASS/FAIL line, printed in the summary.

Run standalone with ``python tests/test_acceptance.py``.
"""

import hashlib
import json
import subprocess
import sys
import time
from collections import Counter

import pytest

from lagsec.blocks import blockwise_rank, decompose, match_template
from lagsec.combinatorics import partition_census, partition_classes
from lagsec.lagrangian import (
    break_isotropy,
    coordinate_subspace,
    is_isotropic,
    random_lagrangian,
    verify_kernel_membership,
)
from lagsec.linalg import rank, rank_mod_p
from lagsec.plucker import CONVENTIONS, PLAIN, build_matrix, form_eval
from lagsec.report import rank_report
from lagsec.templates import L2, L3, L4

RESULTS = {}


def record(name, ok, detail):
    RESULTS[name] = (ok, detail)
    assert ok, f"{name}: {detail}"


def test_c1_characteristic_table():
    t0 = time.perf_counter()
    rep = rank_report(6, [0, 2, 3, 5, 7], PLAIN)
    dt = time.perf_counter() - t0
    ranks = [r.rank for r in rep.table]
    nulls = [r.nullity for r in rep.table]
    ok = ranks == [495, 430, 494, 495, 495] and nulls == [429, 494, 430, 429, 429] and dt < 10
    record("C1 characteristic table", ok, f"ranks={ranks} nullities={nulls} {dt:.2f}s")


def test_c2_sub_block_ranks():
    got = {
        "L3": {c: rank(L3, c) for c in (0, 2, 3, 5, 7)},
        "L4": {c: rank(L4, c) for c in (0, 2, 3, 5, 7)},
    }
    # char 2 value of L4 by plain GF(2) elimination, dense and sparse
    l4_gf2 = {rank_mod_p(L4, 2, "dense"), rank_mod_p(L4, 2, "sparse")}
    ok = (got["L3"] == {0: 4, 2: 3, 3: 4, 5: 4, 7: 4}
          and got["L4"] == {0: 15, 2: 10, 3: 14, 5: 15, 7: 15}
          and l4_gf2 == {10}
          and all(rank(L2, c) == 1 for c in (0, 2, 3, 5, 7)))
    record("C2 sub-block ranks", ok, json.dumps(got))


def test_c3_partition_census():
    census = partition_census(6)
    sizes = Counter(len(m) for (k, _), m in partition_classes(6).items() if k == 1)
    ok = (census[2][1] == 15 and census[1] == (60, 240) and sizes == {4: 60}
          and census[0] == (240, 240) and sum(t for _, t in census.values()) == 495)
    record("C3 partition census", ok, str(census))


def test_c4_block_decomposition():
    dec = decompose(build_matrix(6, PLAIN))
    shapes = Counter(c.shape for c in dec.components)
    tmpl = {(15, 20): L4, (4, 6): L3, (1, 2): L2}
    matched = all(match_template(c, tmpl[c.shape]) for c in dec.components)
    ok = (shapes == {(15, 20): 1, (4, 6): 60, (1, 2): 240}
          and len(dec.isolated_columns) == 64 and matched)
    record("C4 block decomposition", ok,
           f"{dict(shapes)} isolated={len(dec.isolated_columns)} templates_matched={matched}")


def test_c5_oracle_equivalence():
    t0 = time.perf_counter()
    bad = []
    for conv in CONVENTIONS:
        for n in (2, 3, 4, 5, 6):
            B = build_matrix(n, conv)
            dec = decompose(B)
            for c in (0, 2, 3, 5, 7):
                if blockwise_rank(B, c, dec).rank != rank(B, c, method="dense"):
                    bad.append((conv, n, c))
    dt = time.perf_counter() - t0
    record("C5 oracle equivalence", not bad and dt < 60, f"mismatches={bad} {dt:.2f}s")


def test_c6_surjectivity():
    rep = rank_report(6, [0, 2, 3, 5, 7], PLAIN)
    flags = {r.char: r.surjective for r in rep.table}
    ok = flags == {0: True, 2: False, 3: False, 5: True, 7: True}
    record("C6 surjectivity", ok, str(flags))


def _gram_zero(W):
    n, p = W.n, W.p
    return all(
        sum(u[i - 1] * v[j - 1] * form_eval(i, j, n, "signed")
            for i in range(1, 2 * n + 1) for j in range(1, 2 * n + 1)) % p == 0
        for u in W.rows for v in W.rows)


def test_c7_geometric_suite():
    lines = []
    ok = True
    for p in (2, 3, 5, 7):
        passes = {c: 0 for c in CONVENTIONS}
        iso = 0
        each = 0
        for seed in range(100):
            W = random_lagrangian(6, p, seed=seed)
            iso += _gram_zero(W) and is_isotropic(W)
            hits = {c: verify_kernel_membership(W, c) for c in CONVENTIONS}
            each += any(hits.values())
            for c in CONVENTIONS:
                passes[c] += hits[c]
        good = [c for c in CONVENTIONS if passes[c] == 100]
        neg_fixed = coordinate_subspace([1, 2, 3, 4, 5, 8], 6, p)
        neg_broken = break_isotropy(random_lagrangian(6, p, seed=0), seed=p)
        controls_fail = bool(good) and all(
            not verify_kernel_membership(N, c) for N in (neg_fixed, neg_broken) for c in good)
        ok &= iso == 100 and each == 100 and controls_fail and not _gram_zero(neg_broken)
        lines.append(f"p={p} isotropic={iso}/100 plain={passes['plain']}/100 "
                     f"signed={passes['signed']}/100 controls_fail={controls_fail}")
    record("C7 geometric property suite", ok, "; ".join(lines))


def _sha(args):
    out = subprocess.run([sys.executable, "-m", "lagsec", *args], check=True,
                         capture_output=True).stdout
    return hashlib.sha256(out).hexdigest()


def test_c8_determinism(tmp_path):
    cmds = [["matrix", "--n", "6", "--format", "mtx"],
            ["matrix", "--n", "6", "--format", "csv", "--convention", "signed"],
            ["table", "--n", "6", "--chars", "0,2,3,5,7", "--json"],
            ["table", "--n", "6", "--chars", "0,2,3,5,7"]]
    ok = all(_sha(c) == _sha(c) for c in cmds)
    record("C8 determinism", ok, f"{len(cmds)} commands byte-identical across runs")


def test_c9_n7_extension():
    t0 = time.perf_counter()
    B = build_matrix(7, PLAIN)
    dec = decompose(B)
    ranks = {c: blockwise_rank(B, c, dec).rank for c in (0, 2, 3, 5, 7)}
    dt = time.perf_counter() - t0
    ok = B.shape == (2002, 3432) and dt < 120
    record("C9 n=7 extension", ok,
           f"shape={B.shape} blocks={ {f'{r}x{c}': k for (r, c), k in Counter(x.shape for x in dec.components).items()} } "
           f"isolated={len(dec.isolated_columns)} ranks={ranks} {dt:.2f}s")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
