"""Shared graph builders and strategies for the test suite."""

import itertools

import hypothesis.strategies as st

import sbgraph as sg


def c3():
    return sg.build_digraph(3, [(0, 1), (1, 2), (2, 0)])


def directed_cycle(n):
    return sg.build_digraph(n, [(i, (i + 1) % n) for i in range(n)])


def bidirected_complete(n):
    return sg.build_digraph(
        n, [(a, b) for a in range(n) for b in range(n) if a != b]
    )


def bidirected_cycle(n):
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges += [(i, j), (j, i)]
    return sg.build_digraph(n, edges)


def two_triangles():
    """Two directed triangles sharing vertex 2."""
    return sg.build_digraph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


def single_arc():
    return sg.build_digraph(2, [(0, 1)])


def one_based(*ids):
    """Map 1-based vertex labels to the fixture files' 0-based ids."""
    return tuple(sorted(i - 1 for i in ids))


def all_pairs(n):
    return [(u, v) for u in range(n) for v in range(n) if u != v]


@st.composite
def digraphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = all_pairs(n)
    if pairs:
        edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    else:
        edges = []
    return sg.build_digraph(n, edges)


def random_sb_corpus(count, seed_base=0, nmin=3, nmax=8, p=0.6):
    """Deterministic list of strongly biconnected test graphs."""
    graphs = []
    for i in range(count):
        n = nmin + i % (nmax - nmin + 1)
        graphs.append(sg.gen_random_sb(n, p, seed_base + i))
    return graphs


def brute_connected_components(n, und_edges, skip=None):
    """Reference component count by naive union-find, ignoring `skip`."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    alive = [v for v in range(n) if v != skip]
    for a, b in und_edges:
        if a == skip or b == skip:
            continue
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in alive})


def brute_scc_partition(g):
    """Reference SCC partition via reachability closure (small n only)."""
    reach = [set([v]) for v in range(g.n)]
    for v in range(g.n):
        stack = [v]
        while stack:
            x = stack.pop()
            for y in g.out_adj[x]:
                if y not in reach[v]:
                    reach[v].add(y)
                    stack.append(y)
    classes = []
    seen = set()
    for v in range(g.n):
        if v in seen:
            continue
        cls = sorted(w for w in range(g.n) if v in reach[w] and w in reach[v])
        classes.append(tuple(cls))
        seen.update(cls)
    classes.sort(key=lambda c: c[0])
    return classes


def overlaps_at_most(family, k):
    for a, b in itertools.combinations(family, 2):
        if len(set(a) & set(b)) > k:
            return False
    return True
