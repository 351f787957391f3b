# cython: boundscheck=False, wraparound=False, nonecheck=False
"""Compiled traversal kernels.

Same contracts and the same traversal order as the pure backend, so both
produce identical output; only the inner loops run on C arrays.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset


cdef int _prepare(object adj, object sub, int n,
                  int** indptr_out, int** indices_out,
                  unsigned char** active_out,
                  int** order_out, int* order_len) except -1:
    """Flatten the active rows of `adj` into CSR arrays."""
    cdef unsigned char* active = NULL
    cdef int* order = NULL
    cdef int* indptr = NULL
    cdef int* indices = NULL
    cdef int i, v, w, m, pos, k
    cdef list sublist
    try:
        active = <unsigned char*> malloc(n if n else 1)
        if active == NULL:
            raise MemoryError()
        if sub is None:
            memset(active, 1, n)
            order = <int*> malloc((n if n else 1) * sizeof(int))
            if order == NULL:
                raise MemoryError()
            for i in range(n):
                order[i] = i
            order_len[0] = n
        else:
            memset(active, 0, n)
            sublist = list(sub)
            k = len(sublist)
            order = <int*> malloc((k if k else 1) * sizeof(int))
            if order == NULL:
                raise MemoryError()
            for i in range(k):
                v = sublist[i]
                order[i] = v
                active[v] = 1
            order_len[0] = k
        indptr = <int*> malloc((n + 1) * sizeof(int))
        if indptr == NULL:
            raise MemoryError()
        m = 0
        indptr[0] = 0
        for v in range(n):
            if active[v]:
                m += len(<tuple> adj[v])
            indptr[v + 1] = m
        indices = <int*> malloc((m if m else 1) * sizeof(int))
        if indices == NULL:
            raise MemoryError()
        for i in range(order_len[0]):
            v = order[i]
            pos = indptr[v]
            for w in <tuple> adj[v]:
                indices[pos] = w
                pos += 1
    except BaseException:
        free(active)
        free(order)
        free(indptr)
        free(indices)
        raise
    indptr_out[0] = indptr
    indices_out[0] = indices
    active_out[0] = active
    order_out[0] = order
    return 0


def scc_ids(int n, adj, sub=None):
    """Tarjan SCC restricted to `sub`; see the pure backend."""
    if n == 0:
        return 0, []
    cdef unsigned char* active = NULL
    cdef int* order = NULL
    cdef int* indptr = NULL
    cdef int* indices = NULL
    cdef int order_len = 0
    _prepare(adj, sub, n, &indptr, &indices, &active, &order, &order_len)
    cdef int* index = NULL
    cdef int* low = NULL
    cdef int* comp = NULL
    cdef int* stack = NULL
    cdef int* dfs_v = NULL
    cdef int* dfs_i = NULL
    cdef unsigned char* on_stack = NULL
    cdef int ncomp = 0, counter = 0, sp = 0, fp = 0
    cdef int ri, root, v, w, i, stop, descended, p
    try:
        index = <int*> malloc(n * sizeof(int))
        low = <int*> malloc(n * sizeof(int))
        comp = <int*> malloc(n * sizeof(int))
        stack = <int*> malloc(n * sizeof(int))
        dfs_v = <int*> malloc(n * sizeof(int))
        dfs_i = <int*> malloc(n * sizeof(int))
        on_stack = <unsigned char*> malloc(n)
        if (index == NULL or low == NULL or comp == NULL or stack == NULL
                or dfs_v == NULL or dfs_i == NULL or on_stack == NULL):
            raise MemoryError()
        for v in range(n):
            index[v] = -1
            comp[v] = -1
        memset(on_stack, 0, n)
        for ri in range(order_len):
            root = order[ri]
            if index[root] != -1:
                continue
            index[root] = counter
            low[root] = counter
            counter += 1
            stack[sp] = root
            sp += 1
            on_stack[root] = 1
            dfs_v[0] = root
            dfs_i[0] = indptr[root]
            fp = 1
            while fp:
                v = dfs_v[fp - 1]
                i = dfs_i[fp - 1]
                stop = indptr[v + 1]
                descended = 0
                while i < stop:
                    w = indices[i]
                    i += 1
                    if not active[w]:
                        continue
                    if index[w] == -1:
                        dfs_i[fp - 1] = i
                        index[w] = counter
                        low[w] = counter
                        counter += 1
                        stack[sp] = w
                        sp += 1
                        on_stack[w] = 1
                        dfs_v[fp] = w
                        dfs_i[fp] = indptr[w]
                        fp += 1
                        descended = 1
                        break
                    if on_stack[w] and index[w] < low[v]:
                        low[v] = index[w]
                if descended:
                    continue
                fp -= 1
                if low[v] == index[v]:
                    while True:
                        w = stack[sp - 1]
                        sp -= 1
                        on_stack[w] = 0
                        comp[w] = ncomp
                        if w == v:
                            break
                    ncomp += 1
                if fp:
                    p = dfs_v[fp - 1]
                    if low[v] < low[p]:
                        low[p] = low[v]
        result = [comp[v] for v in range(n)]
        return ncomp, result
    finally:
        free(index)
        free(low)
        free(comp)
        free(stack)
        free(dfs_v)
        free(dfs_i)
        free(on_stack)
        free(active)
        free(order)
        free(indptr)
        free(indices)


def bcc(int n, adj, sub=None):
    """Hopcroft-Tarjan biconnected components; see the pure backend."""
    if n == 0:
        return [], [], True
    cdef unsigned char* active = NULL
    cdef int* order = NULL
    cdef int* indptr = NULL
    cdef int* indices = NULL
    cdef int order_len = 0
    _prepare(adj, sub, n, &indptr, &indices, &active, &order, &order_len)
    cdef int* disc = NULL
    cdef int* low = NULL
    cdef int* parent = NULL
    cdef int* dfs_v = NULL
    cdef int* dfs_i = NULL
    cdef int* e_a = NULL
    cdef int* e_b = NULL
    cdef unsigned char* is_ap = NULL
    cdef unsigned char* in_block = NULL
    cdef int counter = 0, trees = 0, ep = 0, fp = 0
    cdef int ri, root, v, w, i, stop, descended, p
    cdef int root_children, tree_size, a, b
    cdef int total = indptr[n]
    cdef list blocks = [], members
    try:
        disc = <int*> malloc(n * sizeof(int))
        low = <int*> malloc(n * sizeof(int))
        parent = <int*> malloc(n * sizeof(int))
        dfs_v = <int*> malloc(n * sizeof(int))
        dfs_i = <int*> malloc(n * sizeof(int))
        e_a = <int*> malloc((total if total else 1) * sizeof(int))
        e_b = <int*> malloc((total if total else 1) * sizeof(int))
        is_ap = <unsigned char*> malloc(n)
        in_block = <unsigned char*> malloc(n)
        if (disc == NULL or low == NULL or parent == NULL or dfs_v == NULL
                or dfs_i == NULL or e_a == NULL or e_b == NULL
                or is_ap == NULL or in_block == NULL):
            raise MemoryError()
        for v in range(n):
            disc[v] = -1
            parent[v] = -1
        memset(is_ap, 0, n)
        memset(in_block, 0, n)
        for ri in range(order_len):
            root = order[ri]
            if disc[root] != -1:
                continue
            trees += 1
            root_children = 0
            tree_size = 1
            disc[root] = counter
            low[root] = counter
            counter += 1
            dfs_v[0] = root
            dfs_i[0] = indptr[root]
            fp = 1
            while fp:
                v = dfs_v[fp - 1]
                i = dfs_i[fp - 1]
                stop = indptr[v + 1]
                descended = 0
                while i < stop:
                    w = indices[i]
                    i += 1
                    if not active[w]:
                        continue
                    if disc[w] == -1:
                        parent[w] = v
                        if v == root:
                            root_children += 1
                        e_a[ep] = v
                        e_b[ep] = w
                        ep += 1
                        disc[w] = counter
                        low[w] = counter
                        counter += 1
                        tree_size += 1
                        dfs_i[fp - 1] = i
                        dfs_v[fp] = w
                        dfs_i[fp] = indptr[w]
                        fp += 1
                        descended = 1
                        break
                    if w != parent[v] and disc[w] < disc[v]:
                        e_a[ep] = v
                        e_b[ep] = w
                        ep += 1
                        if disc[w] < low[v]:
                            low[v] = disc[w]
                if descended:
                    continue
                dfs_i[fp - 1] = i
                fp -= 1
                if fp:
                    p = dfs_v[fp - 1]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] >= disc[p]:
                        members = []
                        while True:
                            ep -= 1
                            a = e_a[ep]
                            b = e_b[ep]
                            if not in_block[a]:
                                in_block[a] = 1
                                members.append(a)
                            if not in_block[b]:
                                in_block[b] = 1
                                members.append(b)
                            if a == p and b == v:
                                break
                        for a in members:
                            in_block[a] = 0
                        members.sort()
                        blocks.append(members)
                        if p != root:
                            is_ap[p] = 1
            if root_children >= 2:
                is_ap[root] = 1
            if tree_size == 1:
                blocks.append([root])
        aps = []
        for i in range(order_len):
            if is_ap[order[i]]:
                aps.append(order[i])
        aps.sort()
        return blocks, aps, trees <= 1
    finally:
        free(disc)
        free(low)
        free(parent)
        free(dfs_v)
        free(dfs_i)
        free(e_a)
        free(e_b)
        free(is_ap)
        free(in_block)
        free(active)
        free(order)
        free(indptr)
        free(indices)
