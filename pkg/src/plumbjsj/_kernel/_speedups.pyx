# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``plumbjsj._kernel.pure`` for the reference
implementations and the encoding contract.  The two modules expose the same
three functions and must stay behaviourally identical."""

from libc.stdlib cimport free, malloc
from libc.string cimport memset


cdef struct Graph:
    int n
    int ne
    int* eu
    int* ev
    int* es
    int* off       # CSR offsets, length n+1
    int* nbr       # CSR neighbours, length 2*ne
    int* nsgn      # CSR edge signs, length 2*ne


cdef int _graph_init(Graph* g, int n, signs_obj, edges_obj, int** sgn_out) except -1:
    cdef int i, u, v, s
    cdef list edges = list(edges_obj)
    cdef int ne = len(edges)
    g.n = n
    g.ne = ne
    g.eu = <int*>malloc(sizeof(int) * (ne if ne else 1))
    g.ev = <int*>malloc(sizeof(int) * (ne if ne else 1))
    g.es = <int*>malloc(sizeof(int) * (ne if ne else 1))
    g.off = <int*>malloc(sizeof(int) * (n + 1))
    g.nbr = <int*>malloc(sizeof(int) * (2 * ne if ne else 1))
    g.nsgn = <int*>malloc(sizeof(int) * (2 * ne if ne else 1))
    cdef int* sgn = <int*>malloc(sizeof(int) * (n if n else 1))
    if (g.eu == NULL or g.ev == NULL or g.es == NULL or g.off == NULL
            or g.nbr == NULL or g.nsgn == NULL or sgn == NULL):
        raise MemoryError()
    sgn_out[0] = sgn
    for i in range(n):
        sgn[i] = signs_obj[i]
    for i in range(ne):
        u, v, s = edges[i]
        g.eu[i] = u
        g.ev[i] = v
        g.es[i] = s
    _build_csr(g)
    return 0


cdef void _build_csr(Graph* g) noexcept nogil:
    cdef int i, u, v
    cdef int n = g.n
    memset(g.off, 0, sizeof(int) * (n + 1))
    for i in range(g.ne):
        g.off[g.eu[i] + 1] += 1
        g.off[g.ev[i] + 1] += 1
    for i in range(n):
        g.off[i + 1] += g.off[i]
    # off now holds insert positions; restore after filling
    for i in range(g.ne):
        u = g.eu[i]
        v = g.ev[i]
        g.nbr[g.off[u]] = v
        g.nsgn[g.off[u]] = g.es[i]
        g.off[u] += 1
        g.nbr[g.off[v]] = u
        g.nsgn[g.off[v]] = g.es[i]
        g.off[v] += 1
    for i in range(n, 0, -1):
        g.off[i] = g.off[i - 1]
    g.off[0] = 0


cdef void _graph_free(Graph* g, int* sgn) noexcept:
    free(g.eu)
    free(g.ev)
    free(g.es)
    free(g.off)
    free(g.nbr)
    free(g.nsgn)
    free(sgn)


cdef bint _propagate(Graph* g, int* sgn, int* tau, int* stack) noexcept nogil:
    cdef int i, j, v, w, t, top, tv
    memset(tau, 0, sizeof(int) * g.n)
    for i in range(g.n):
        if sgn[i] == 0 or tau[i] != 0:
            continue
        tau[i] = sgn[i]
        stack[0] = i
        top = 1
        while top:
            top -= 1
            v = stack[top]
            tv = tau[v]
            for j in range(g.off[v], g.off[v + 1]):
                w = g.nbr[j]
                t = tv * g.nsgn[j]
                if tau[w] == 0:
                    if sgn[w] != 0 and sgn[w] != t:
                        return False
                    tau[w] = t
                    stack[top] = w
                    top += 1
                elif tau[w] != t:
                    return False
    return True


cdef bint _dfs(Graph* g, int* sgn, unsigned char* visited,
               int start, int v, int prod, int depth) noexcept nogil:
    cdef int j, w, p
    for j in range(g.off[v], g.off[v + 1]):
        w = g.nbr[j]
        p = prod * g.nsgn[j]
        if w == start:
            if depth >= 2 and p < 0:
                return False
            continue
        if visited[w]:
            continue
        if sgn[w] != 0 and sgn[start] * p * sgn[w] < 0:
            return False
        visited[w] = 1
        if not _dfs(g, sgn, visited, start, w, p, depth + 1):
            return False
        visited[w] = 0
    return True


cdef bint _paths_ok(Graph* g, int* sgn, unsigned char* visited) noexcept nogil:
    cdef int start
    memset(visited, 0, g.n)
    for start in range(g.n):
        if sgn[start] == 0:
            continue
        visited[start] = 1
        if not _dfs(g, sgn, visited, start, start, 1, 0):
            return False
        visited[start] = 0
    return True


def propagation_consistent(int n, signs, edges):
    cdef Graph g
    cdef int* sgn = NULL
    _graph_init(&g, n, signs, edges, &sgn)
    cdef int* tau = <int*>malloc(sizeof(int) * (n if n else 1))
    cdef int* stack = <int*>malloc(sizeof(int) * (n if n else 1))
    if tau == NULL or stack == NULL:
        free(tau)
        free(stack)
        _graph_free(&g, sgn)
        raise MemoryError()
    cdef bint ok = _propagate(&g, sgn, tau, stack)
    free(tau)
    free(stack)
    _graph_free(&g, sgn)
    return ok


def paths_consistent(int n, signs, edges):
    cdef Graph g
    cdef int* sgn = NULL
    _graph_init(&g, n, signs, edges, &sgn)
    cdef unsigned char* visited = <unsigned char*>malloc(n if n else 1)
    if visited == NULL:
        _graph_free(&g, sgn)
        raise MemoryError()
    cdef bint ok = _paths_ok(&g, sgn, visited)
    free(visited)
    _graph_free(&g, sgn)
    return ok


def maximal_consistent_masks(int n, extreme, signs, edges):
    if n > 30:
        raise ValueError("subset enumeration limited to 30 vertices")
    cdef Graph g
    cdef Graph sub
    cdef int* sgn = NULL
    _graph_init(&g, n, signs, edges, &sgn)

    cdef int i
    cdef unsigned int mask, ext_mask = 0
    for i in range(n):
        if extreme[i]:
            ext_mask |= 1u << i

    cdef unsigned int total = 1u << n
    cdef unsigned char* consistent = <unsigned char*>malloc(total)
    cdef int* tau = <int*>malloc(sizeof(int) * (n if n else 1))
    cdef int* stack = <int*>malloc(sizeof(int) * (n if n else 1))
    sub.n = n
    sub.eu = <int*>malloc(sizeof(int) * (g.ne if g.ne else 1))
    sub.ev = <int*>malloc(sizeof(int) * (g.ne if g.ne else 1))
    sub.es = <int*>malloc(sizeof(int) * (g.ne if g.ne else 1))
    sub.off = <int*>malloc(sizeof(int) * (n + 1))
    sub.nbr = <int*>malloc(sizeof(int) * (2 * g.ne if g.ne else 1))
    sub.nsgn = <int*>malloc(sizeof(int) * (2 * g.ne if g.ne else 1))
    if (consistent == NULL or tau == NULL or stack == NULL or sub.eu == NULL
            or sub.ev == NULL or sub.es == NULL or sub.off == NULL
            or sub.nbr == NULL or sub.nsgn == NULL):
        raise MemoryError()

    cdef int j, ne
    with nogil:
        for mask in range(total):
            if mask & ~ext_mask:
                consistent[mask] = 0
                continue
            ne = 0
            for j in range(g.ne):
                if (mask >> g.eu[j] & 1u) and (mask >> g.ev[j] & 1u):
                    sub.eu[ne] = g.eu[j]
                    sub.ev[ne] = g.ev[j]
                    sub.es[ne] = g.es[j]
                    ne += 1
            sub.ne = ne
            _build_csr(&sub)
            # Signs of vertices outside the mask are irrelevant: they are
            # isolated in the induced edge set and constrain nothing.
            consistent[mask] = _propagate(&sub, sgn, tau, stack)

    out = []
    cdef bint maximal
    for mask in range(total):
        if not consistent[mask]:
            continue
        maximal = True
        for i in range(n):
            if not (mask >> i & 1u) and consistent[mask | (1u << i)]:
                maximal = False
                break
        if maximal:
            out.append(mask)

    free(consistent)
    free(tau)
    free(stack)
    free(sub.eu)
    free(sub.ev)
    free(sub.es)
    free(sub.off)
    free(sub.nbr)
    free(sub.nsgn)
    _graph_free(&g, sgn)
    return out
