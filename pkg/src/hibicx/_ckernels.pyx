# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled versions of the hot loops in ``_pykernels``; same signatures."""
from libc.stdlib cimport malloc, free

NAME = "cython"


cdef struct Graph:
    int V
    int *up_ptr
    int *up_idx
    int *dn_ptr
    int *dn_idx


cdef int _csr(object adj, int **ptr, int **idx) except -1:
    cdef int V = len(adj)
    cdef int total = 0, k = 0, i
    for row in adj:
        total += len(row)
    ptr[0] = <int *> malloc((V + 1) * sizeof(int))
    idx[0] = <int *> malloc((total + 1) * sizeof(int))
    if ptr[0] == NULL or idx[0] == NULL:
        raise MemoryError()
    for i in range(V):
        ptr[0][i] = k
        for j in adj[i]:
            idx[0][k] = j
            k += 1
    ptr[0][V] = k
    return 0


cdef void _free_graph(Graph *g):
    free(g.up_ptr)
    free(g.up_idx)
    free(g.dn_ptr)
    free(g.dn_idx)


cdef int _make_graph(Graph *g, object ups, object downs) except -1:
    g.V = len(ups)
    g.up_ptr = NULL
    g.up_idx = NULL
    g.dn_ptr = NULL
    g.dn_idx = NULL
    _csr(ups, &g.up_ptr, &g.up_idx)
    _csr(downs, &g.dn_ptr, &g.dn_idx)
    return 0


cdef bint _closure(long long *xi, long long n, Graph *g, int *stack, char *seen):
    cdef int V = g.V, top = V - 1, sp = 0, v, k, b, a
    for k in range(V):
        seen[k] = 0
    seen[0] = 1
    stack[sp] = 0
    sp += 1
    while sp > 0:
        sp -= 1
        v = stack[sp]
        for k in range(g.up_ptr[v], g.up_ptr[v + 1]):
            b = g.up_idx[k]
            if not seen[b] and xi[v] == xi[b] - n:
                if b == top:
                    return True
                seen[b] = 1
                stack[sp] = b
                sp += 1
        for k in range(g.dn_ptr[v], g.dn_ptr[v + 1]):
            a = g.dn_idx[k]
            if not seen[a]:
                seen[a] = 1
                stack[sp] = a
                sp += 1
    return False


def is_minimal(xi, long long n, ups, downs):
    cdef Graph g
    cdef int V = len(xi), i
    cdef long long *x = <long long *> malloc(V * sizeof(long long))
    cdef int *stack = <int *> malloc(V * sizeof(int))
    cdef char *seen = <char *> malloc(V)
    _make_graph(&g, ups, downs)
    try:
        for i in range(V):
            x[i] = xi[i]
        return _closure(x, n, &g, stack, seen)
    finally:
        free(x)
        free(stack)
        free(seen)
        _free_graph(&g)


def enumerate_module(order, ups, downs, long long n, lb, ub, bint minimal_only):
    cdef Graph g
    cdef int V = len(order), pos, v, k, a, i
    cdef long long hi, t
    cdef long long *val = <long long *> malloc(V * sizeof(long long))
    cdef long long *cur = <long long *> malloc(V * sizeof(long long))
    cdef long long *his = <long long *> malloc(V * sizeof(long long))
    cdef long long *clb = <long long *> malloc(V * sizeof(long long))
    cdef long long *cub = <long long *> malloc(V * sizeof(long long))
    cdef int *ord_ = <int *> malloc(V * sizeof(int))
    cdef int *stack = <int *> malloc(V * sizeof(int))
    cdef char *seen = <char *> malloc(V)
    out = []
    _make_graph(&g, ups, downs)
    try:
        for i in range(V):
            ord_[i] = order[i]
            clb[i] = lb[i]
            cub[i] = ub[i]
        pos = 0
        v = ord_[0]
        cur[0] = clb[v]
        his[0] = cub[v]
        while pos >= 0:
            if cur[pos] > his[pos]:
                pos -= 1
                if pos >= 0:
                    cur[pos] += 1
                continue
            v = ord_[pos]
            val[v] = cur[pos]
            if pos == V - 1:
                if not minimal_only or _closure(val, n, &g, stack, seen):
                    out.append(tuple([val[i] for i in range(V)]))
                cur[pos] += 1
                continue
            pos += 1
            v = ord_[pos]
            hi = cub[v]
            for k in range(g.dn_ptr[v], g.dn_ptr[v + 1]):
                a = g.dn_idx[k]
                t = val[a] + n
                if t < hi:
                    hi = t
            cur[pos] = clb[v]
            his[pos] = hi
        return out
    finally:
        free(val)
        free(cur)
        free(his)
        free(clb)
        free(cub)
        free(ord_)
        free(stack)
        free(seen)
        _free_graph(&g)


cdef inline long long _floordiv(long long a, long long b):
    cdef long long q = a // b
    return q


def least_split(xi, cov_a, cov_b, long long n1, long long n2, long long q):
    cdef int V = len(xi), E = len(cov_a), top = V - 1, k, it, a, b
    cdef bint changed, feasible = False
    cdef long long t
    cdef long long *x = <long long *> malloc(V * sizeof(long long))
    cdef char *known = <char *> malloc(V)
    cdef long long *c = <long long *> malloc((E + 1) * sizeof(long long))
    cdef int *ca = <int *> malloc((E + 1) * sizeof(int))
    cdef int *cb = <int *> malloc((E + 1) * sizeof(int))
    try:
        for k in range(V):
            known[k] = 0
            x[k] = 0
        known[top] = 1
        for k in range(E):
            ca[k] = cov_a[k]
            cb[k] = cov_b[k]
            # Python floor division semantics (cdivision=False)
            c[k] = -_floordiv(<long long> xi[ca[k]] - <long long> xi[cb[k]] + n1, q)
        for it in range(V + 1):
            changed = False
            for k in range(E):
                a = ca[k]
                b = cb[k]
                if known[a]:
                    t = x[a] + c[k]
                    if not known[b] or t > x[b]:
                        x[b] = t
                        known[b] = 1
                        changed = True
                if known[b]:
                    t = x[b] - n2
                    if not known[a] or t > x[a]:
                        x[a] = t
                        known[a] = 1
                        changed = True
            if not changed:
                feasible = True
                break
            if x[top] > 0:
                break
        if not feasible:
            return None
        return tuple([x[k] for k in range(V)])
    finally:
        free(x)
        free(known)
        free(c)
        free(ca)
        free(cb)
