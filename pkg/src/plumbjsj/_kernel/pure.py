"""Pure-Python kernels for sign propagation and path-product checking.

These are the interpreted twins of the compiled routines in ``_speedups``;
both operate on a compact encoding of a decorated graph:

    n       -- number of vertices, labelled 0..n-1
    signs   -- per-vertex sign of the secondary weight, each -1, 0 or +1
    extreme -- per-vertex flag, truthy when the decoration is extreme
    edges   -- iterable of (u, v, sign) with u != v and sign = +-1

``propagation_consistent`` and ``paths_consistent`` both decide whether every
endpoint-sign / edge-sign product over paths (including closed paths based at
a signed vertex) is non-negative -- the first by spreading a tentative sign
over each component, the second by brute-force path enumeration.  They are
kept as two genuinely independent routes on purpose.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Edge = tuple[int, int, int]


def _adjacency(n: int, edges: Iterable[Edge]) -> list[list[tuple[int, int]]]:
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v, s in edges:
        adj[u].append((v, s))
        adj[v].append((u, s))
    return adj


def propagation_consistent(n: int, signs: Sequence[int], edges: Iterable[Edge]) -> bool:
    """Breadth-first sign propagation from a signed root in each component."""
    adj = _adjacency(n, edges)
    tau = [0] * n
    for root in range(n):
        if signs[root] == 0 or tau[root] != 0:
            continue
        tau[root] = signs[root]
        stack = [root]
        while stack:
            v = stack.pop()
            tv = tau[v]
            for w, s in adj[v]:
                t = tv * s
                if tau[w] == 0:
                    if signs[w] != 0 and signs[w] != t:
                        return False
                    tau[w] = t
                    stack.append(w)
                elif tau[w] != t:
                    return False
    return True


def paths_consistent(n: int, signs: Sequence[int], edges: Iterable[Edge]) -> bool:
    """Brute-force enumeration of simple paths between signed endpoints and of
    simple closed paths based at a signed vertex.

    Paths with an unsigned endpoint have product zero and are skipped; that is
    the only pruning applied.
    """
    adj = _adjacency(n, edges)
    visited = [False] * n

    def extend(start: int, v: int, prod: int, depth: int) -> bool:
        for w, s in adj[v]:
            p = prod * s
            if w == start:
                # Closing edge: a simple closed path needs >= 3 vertices.
                if depth >= 2 and p < 0:
                    return False
                continue
            if visited[w]:
                continue
            if signs[w] != 0 and signs[start] * p * signs[w] < 0:
                return False
            visited[w] = True
            if not extend(start, w, p, depth + 1):
                return False
            visited[w] = False
        return True

    for start in range(n):
        if signs[start] == 0:
            continue
        visited[start] = True
        if not extend(start, start, 1, 0):
            return False
        visited[start] = False
    return True


def maximal_consistent_masks(
    n: int,
    extreme: Sequence[int],
    signs: Sequence[int],
    edges: Iterable[Edge],
) -> list[int]:
    """Bitmasks of the maximal vertex subsets inducing a consistent subgraph.

    Exhaustive over all 2^n subsets.  Consistent subsets are closed under
    taking subsets, so maximality only needs single-vertex extensions.
    """
    edge_list = list(edges)
    all_extreme_mask = 0
    for v in range(n):
        if extreme[v]:
            all_extreme_mask |= 1 << v

    consistent = bytearray(1 << n)
    for mask in range(1 << n):
        if mask & ~all_extreme_mask:
            continue
        sub_edges = [(u, v, s) for u, v, s in edge_list if mask >> u & 1 and mask >> v & 1]
        if propagation_consistent(n, signs, sub_edges):
            consistent[mask] = 1

    out = []
    for mask in range(1 << n):
        if not consistent[mask]:
            continue
        if any(not mask >> v & 1 and consistent[mask | 1 << v] for v in range(n)):
            continue
        out.append(mask)
    return out
