"""2-block families of strongly (bi)connected digraphs.

The central operation computes 2-edge-biconnected blocks: maximal vertex
sets whose pairs stay inside one strongly biconnected component under
every single-arc deletion.  It works on a boolean pair relation: clear
L[x, y] whenever some b-bridge deletion separates x from y, keep the pairs
related in both directions as an undirected helper graph, and read the
blocks of that helper graph off as the answer.  A maximal-clique
enumeration over the same relation serves as the independent oracle.

2-strong-biconnected blocks (single-vertex deletions, overlaps of up to
two vertices) and the coarser 2-edge / 2-strong blocks are computed
definitionally from per-deletion decompositions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._util import par_map
from .connectivity import (
    canonical_family,
    is_strongly_biconnected,
    is_strongly_connected,
    undirected_blocks,
)
from .errors import (
    GuardError,
    NotStronglyBiconnectedError,
    NotStronglyConnectedError,
)
from .graph import UndirectedGraph, remove_edge, remove_vertex
from .resilience import b_bridges
from .sbc import strongly_biconnected_components


def _require_sb(g, op):
    if not is_strongly_biconnected(g):
        raise NotStronglyBiconnectedError(
            f"{op} requires a strongly biconnected input graph"
        )


def _require_sc(g, op):
    if not is_strongly_connected(g):
        raise NotStronglyConnectedError(
            f"{op} requires a strongly connected input graph"
        )


@dataclass(frozen=True)
class RelationMatrix:
    """Boolean n*n table; cells[x, y] says x and y survive every probed
    deletion inside one strongly biconnected component."""

    n: int
    cells: np.ndarray

    def co(self, x, y):
        return bool(self.cells[x, y])


def _co_membership(n, components, force=None):
    """Boolean matrix of pairwise component co-membership; rows/columns in
    `force` are set wholesale (used for the deleted vertex, which never
    constrains pairs it is not part of)."""
    m = np.zeros((n, n), dtype=bool)
    for comp in components:
        idx = np.fromiter(comp, dtype=np.intp, count=len(comp))
        m[np.ix_(idx, idx)] = True
    if force is not None:
        m[force, :] = True
        m[:, force] = True
    return m


def edge_relation(g, parallel=False, _bridges=None):
    """Pair relation under single-arc deletions.

    L[x, y] is cleared iff some b-bridge deletion puts x and y into
    different strongly biconnected components; arcs that are not b-bridges
    cannot separate anything and are skipped.
    """
    _require_sb(g, "edge_relation")
    n = g.n
    bridges = b_bridges(g, parallel=parallel) if _bridges is None else _bridges
    cells = np.ones((n, n), dtype=bool)

    def mask(bridge):
        decomposition = strongly_biconnected_components(remove_edge(g, bridge))
        return _co_membership(n, decomposition.components)

    for m in par_map(mask, bridges, parallel):
        cells &= m
    return RelationMatrix(n=n, cells=cells)


def helper_graph(relation):
    """Undirected graph joining the pairs related in both directions."""
    sym = relation.cells & relation.cells.T
    pairs = np.argwhere(np.triu(sym, k=1))
    return UndirectedGraph(relation.n, [(int(a), int(b)) for a, b in pairs])


def two_edge_biconnected_blocks(g, parallel=False):
    """All 2-edge-biconnected blocks, canonically ordered.

    No b-bridges means every pair stays related, so the whole vertex set
    is the single block; otherwise the blocks of the helper graph built
    from the edge relation are the answer.
    """
    _require_sb(g, "two_edge_biconnected_blocks")
    if g.n < 2:
        return []
    bridges = b_bridges(g, parallel=parallel)
    if not bridges:
        return [tuple(range(g.n))]
    relation = edge_relation(g, parallel=parallel, _bridges=bridges)
    decomposition = undirected_blocks(helper_graph(relation))
    return canonical_family(b for b in decomposition.blocks if len(b) >= 2)


def _neighbour_sets(cells):
    n = cells.shape[0]
    sym = cells & cells.T
    np.fill_diagonal(sym, False)
    return [frozenset(int(w) for w in np.nonzero(sym[v])[0]) for v in range(n)]


def _max_cliques(neighbours):
    """Maximal cliques of size >= 2, Bron-Kerbosch with pivoting."""
    out = []

    def expand(r, p, x):
        if not p and not x:
            if len(r) >= 2:
                out.append(tuple(sorted(r)))
            return
        pivot = max(sorted(p | x), key=lambda u: len(p & neighbours[u]))
        for v in sorted(p - neighbours[pivot]):
            expand(r | {v}, p & neighbours[v], x & neighbours[v])
            p.remove(v)
            x.add(v)

    expand(set(), set(range(len(neighbours))), set())
    return out


def oracle_two_edge_biconnected_blocks(g, guard=24, parallel=False):
    """Reference computation of the 2-edge-biconnected blocks: maximal
    cliques of the edge relation.  Exponential; guarded by n <= guard."""
    _require_sb(g, "oracle_two_edge_biconnected_blocks")
    if g.n > guard:
        raise GuardError(
            f"oracle_two_edge_biconnected_blocks requires n <= {guard}, got "
            f"n={g.n}; raise the guard explicitly to override"
        )
    relation = edge_relation(g, parallel=parallel)
    return canonical_family(_max_cliques(_neighbour_sets(relation.cells)))


def vertex_relation(g, parallel=False):
    """Pair relation under single-vertex deletions: related pairs stay in
    one strongly biconnected component of G minus z for every other z."""
    _require_sb(g, "vertex_relation")
    n = g.n
    cells = np.ones((n, n), dtype=bool)

    def mask(z):
        h, _ = remove_vertex(g, z)
        survivors = [v for v in range(n) if v != z]
        decomposition = strongly_biconnected_components(h)
        components = [
            [survivors[v] for v in comp] for comp in decomposition.components
        ]
        return _co_membership(n, components, force=z)

    for m in par_map(mask, range(n), parallel):
        cells &= m
    np.fill_diagonal(cells, True)
    return RelationMatrix(n=n, cells=cells)


def two_strong_biconnected_blocks(g, parallel=False):
    """All 2-strong-biconnected blocks: maximal cliques of size >= 2 of
    the vertex relation.  Distinct blocks may share up to two vertices,
    which rules out both partitioning and helper-graph blocking."""
    _require_sb(g, "two_strong_biconnected_blocks")
    relation = vertex_relation(g, parallel=parallel)
    return canonical_family(_max_cliques(_neighbour_sets(relation.cells)))


def two_edge_blocks(g, parallel=False):
    """Maximal sets with two edge-disjoint paths both ways between every
    pair: equivalence classes of "same SCC under every single-arc
    deletion", filtered to size >= 2."""
    _require_sc(g, "two_edge_blocks")
    n = g.n
    labels = [0] * n

    def scc_of(edge):
        h = remove_edge(g, edge)
        return _kernels.scc_ids(h.n, h.out_adj)

    for count, ids in par_map(scc_of, g.edges, parallel):
        if count <= 1:
            continue
        relabel = {}
        for v in range(n):
            key = (labels[v], ids[v])
            labels[v] = relabel.setdefault(key, len(relabel))
    groups = {}
    for v in range(n):
        groups.setdefault(labels[v], []).append(v)
    return canonical_family(c for c in groups.values() if len(c) >= 2)


def two_strong_blocks(g, parallel=False):
    """Maximal sets whose pairs share an SCC of G minus w for every other
    vertex w: maximal cliques of size >= 2 of that relation."""
    _require_sc(g, "two_strong_blocks")
    n = g.n
    cells = np.ones((n, n), dtype=bool)

    def mask(z):
        h, _ = remove_vertex(g, z)
        survivors = [v for v in range(n) if v != z]
        _, ids = _kernels.scc_ids(h.n, h.out_adj)
        groups = {}
        for v in range(h.n):
            groups.setdefault(ids[v], []).append(survivors[v])
        return _co_membership(n, groups.values(), force=z)

    for m in par_map(mask, range(n), parallel):
        cells &= m
    np.fill_diagonal(cells, True)
    return canonical_family(_max_cliques(_neighbour_sets(cells)))
