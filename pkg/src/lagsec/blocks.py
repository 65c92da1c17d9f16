"""Block-diagonal structure of a sparse matrix, found from its sparsity graph.

Rows and columns are the two sides of a bipartite graph with an edge at
every nonzero; each connected component is one diagonal block.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import networkx as nx
from networkx.algorithms import isomorphism

from .combinatorics import InvalidArgument
from .linalg import SparseIntMatrix, check_characteristic, rank


@dataclass
class Component:
    rows: tuple
    cols: tuple
    matrix: SparseIntMatrix

    @property
    def shape(self) -> tuple:
        return self.matrix.shape


@dataclass
class BlockDecomposition:
    nrows: int
    ncols: int
    components: list = field(default_factory=list)
    isolated_columns: tuple = ()
    isolated_rows: tuple = ()

    def shape_counts(self) -> dict:
        """``{(rows, cols): count}``, largest blocks first."""
        counts = Counter(c.shape for c in self.components)
        return dict(sorted(counts.items(), key=lambda kv: (-kv[0][0] * kv[0][1], kv[0])))


def decompose(M: SparseIntMatrix) -> BlockDecomposition:
    # union-find over rows 0..R-1 and columns R..R+C-1
    R = M.nrows
    parent = list(range(R + M.ncols))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r, c, _ in M.entries:
        a, b = find(r), find(R + c)
        if a != b:
            parent[max(a, b)] = min(a, b)

    touched_rows = {r for r, _, _ in M.entries}
    touched_cols = {c for _, c, _ in M.entries}
    groups: dict = {}
    for r in sorted(touched_rows):
        groups.setdefault(find(r), ([], []))[0].append(r)
    for c in sorted(touched_cols):
        groups.setdefault(find(R + c), ([], []))[1].append(c)

    comps = []
    for rows, cols in sorted(groups.values(), key=lambda g: g[0][0]):
        comps.append(Component(tuple(rows), tuple(cols), M.submatrix(rows, cols)))
    iso_c = tuple(c for c in range(M.ncols) if c not in touched_cols)
    iso_r = tuple(r for r in range(M.nrows) if r not in touched_rows)
    return BlockDecomposition(M.nrows, M.ncols, comps, iso_c, iso_r)


@dataclass
class BlockRank:
    char: int
    rank: int
    by_shape: dict  # shape -> list of component ranks, in component order


def blockwise_rank(M, char: int = 0, decomposition: BlockDecomposition | None = None) -> BlockRank:
    """Rank of ``M`` as the sum of the ranks of its diagonal blocks."""
    char = check_characteristic(char)
    dec = decomposition if decomposition is not None else decompose(M)
    by_shape: dict = {}
    cache: dict = {}
    total = 0
    for comp in dec.components:
        # identical blocks are common; rank each distinct one once
        key = (comp.shape, tuple(comp.matrix.entries))
        r = cache.get(key)
        if r is None:
            r = cache[key] = rank(comp.matrix, char)
        by_shape.setdefault(comp.shape, []).append(r)
        total += r
    order = sorted(by_shape, key=lambda s: (-s[0] * s[1], s))
    return BlockRank(char, total, {s: by_shape[s] for s in order})


def _bipartite_graph(M: SparseIntMatrix) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from((("r", i) for i in range(M.nrows)), side="r")
    G.add_nodes_from((("c", j) for j in range(M.ncols)), side="c")
    for r, c, v in M.entries:
        G.add_edge(("r", r), ("c", c), value=v)
    return G


def _matcher(component, template: SparseIntMatrix) -> isomorphism.GraphMatcher:
    M = component.matrix if isinstance(component, Component) else component
    if M.shape != template.shape:
        raise InvalidArgument(f"shape mismatch: {M.shape} vs {template.shape}")
    return isomorphism.GraphMatcher(
        _bipartite_graph(M),
        _bipartite_graph(template),
        node_match=isomorphism.categorical_node_match("side", None),
        edge_match=isomorphism.categorical_edge_match("value", None),
    )


def match_template(component, template: SparseIntMatrix) -> bool:
    """True iff row and column permutations carry ``component`` onto ``template``."""
    return _matcher(component, template).is_isomorphic()


def find_permutation(component, template: SparseIntMatrix):
    """Return ``(row_perm, col_perm)`` with ``M.permuted(...) == template``, or None."""
    gm = _matcher(component, template)
    if not gm.is_isomorphic():
        return None
    nrows, ncols = template.shape
    row_perm = [gm.mapping[("r", i)][1] for i in range(nrows)]
    col_perm = [gm.mapping[("c", j)][1] for j in range(ncols)]
    return row_perm, col_perm
