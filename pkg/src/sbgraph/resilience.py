"""Single-failure resilience analysis.

b-bridges are arcs whose deletion destroys strong biconnectivity;
b-articulation points are vertices that do the same.  Both are computed by
the definitional per-element recheck.  The 2-edge / 2-vertex strongly
biconnected predicates and their maximal components build on top.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import _kernels
from ._util import par_map
from .connectivity import (
    _strongly_biconnected_minus_arc,
    _strongly_biconnected_subset,
    canonical_family,
    is_strongly_biconnected,
)
from .errors import GuardError, NotStronglyBiconnectedError
from .graph import induced_subgraph, underlying


def _require_sb(g, op):
    if not is_strongly_biconnected(g):
        raise NotStronglyBiconnectedError(
            f"{op} requires a strongly biconnected input graph"
        )


def b_bridges(g, parallel=False):
    """Arcs whose deletion leaves a graph that is not strongly biconnected,
    in canonical (tail, head) order.

    Per-arc recheck of the definition; the arc is masked out of the
    adjacency instead of copying the graph m times.
    """
    _require_sb(g, "b_bridges")
    und = underlying(g)
    edges = sorted(g.edges)

    def breaks(e):
        return not _strongly_biconnected_minus_arc(g, und, e)

    flags = par_map(breaks, edges, parallel)
    return [e for e, broken in zip(edges, flags) if broken]


def b_articulation_points(g, parallel=False):
    """Vertices whose deletion leaves a graph that is not strongly
    biconnected."""
    _require_sb(g, "b_articulation_points")
    und = underlying(g)

    def breaks(w):
        rest = [v for v in range(g.n) if v != w]
        return not _strongly_biconnected_subset(g, und, rest)

    flags = par_map(breaks, range(g.n), parallel)
    return tuple(w for w, broken in zip(range(g.n), flags) if broken)


@dataclass(frozen=True)
class CutReport:
    """All single-failure weak points of one graph."""

    b_bridges: tuple
    b_articulation_points: tuple


def cut_report(g, parallel=False):
    return CutReport(
        b_bridges=tuple(b_bridges(g, parallel=parallel)),
        b_articulation_points=b_articulation_points(g, parallel=parallel),
    )


def is_2_edge_strongly_biconnected(g):
    """More than two vertices, strongly biconnected, and no b-bridges."""
    if g.n <= 2 or not is_strongly_biconnected(g):
        return False
    und = underlying(g)
    return all(_strongly_biconnected_minus_arc(g, und, e) for e in g.edges)


def is_2_vertex_strongly_biconnected(g):
    """More than two vertices, strongly biconnected, and no b-articulation
    points."""
    if g.n <= 2 or not is_strongly_biconnected(g):
        return False
    und = underlying(g)
    return all(
        _strongly_biconnected_subset(
            g, und, [v for v in range(g.n) if v != w]
        )
        for w in range(g.n)
    )


def _candidate_regions(g):
    """Disjoint vertex regions that must contain every component with
    internal in- and out-degrees >= 2.

    Any vertex subset C with |C| > 2 whose induced subgraph has no
    b-bridge (or no b-articulation point) gives each member at least two
    internal out-arcs and two internal in-arcs, so iterating "drop
    vertices of internal degree < 2, then split along SCCs" never discards
    a member of a valid component.
    """
    regions = []
    stack = [list(range(g.n))]
    while stack:
        sub = stack.pop()
        members = set(sub)
        changed = True
        while changed:
            changed = False
            for v in list(members):
                outd = sum(1 for w in g.out_adj[v] if w in members)
                ind = sum(1 for w in g.in_adj[v] if w in members)
                if outd < 2 or ind < 2:
                    members.discard(v)
                    changed = True
        if len(members) < 3:
            continue
        core = sorted(members)
        _, ids = _kernels.scc_ids(g.n, g.out_adj, core)
        groups = {}
        for v in core:
            groups.setdefault(ids[v], []).append(v)
        classes = sorted(groups.values(), key=lambda c: c[0])
        if len(classes) == 1 and len(core) == len(sub):
            regions.append(core)
            continue
        for c in classes:
            if len(c) >= 3:
                stack.append(c)
    regions.sort(key=lambda c: c[0])
    return regions


def _maximal_components(g, guard, predicate, op):
    if g.n > guard:
        raise GuardError(
            f"{op} requires n <= {guard}, got n={g.n}; raise the guard "
            "explicitly to override"
        )
    found = []
    for region in _candidate_regions(g):
        accepted = []
        for size in range(len(region), 2, -1):
            for comb in itertools.combinations(region, size):
                cs = set(comb)
                if any(cs <= a for a in accepted):
                    continue
                h, _ = induced_subgraph(g, comb)
                if predicate(h):
                    accepted.append(cs)
                    found.append(comb)
    return canonical_family(found)


def components_2esb(g, guard=12):
    """Maximal vertex subsets inducing 2-edge-strongly-biconnected
    subgraphs.  Enumeration-based and guarded; regions that cannot host a
    component are pruned first."""
    return _maximal_components(
        g, guard, is_2_edge_strongly_biconnected, "components_2esb"
    )


def components_2vsb(g, guard=12):
    """Maximal vertex subsets inducing 2-vertex-strongly-biconnected
    subgraphs.  Enumeration-based and guarded."""
    return _maximal_components(
        g, guard, is_2_vertex_strongly_biconnected, "components_2vsb"
    )
