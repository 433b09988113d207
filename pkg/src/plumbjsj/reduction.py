"""Reduction of inconsistent plumbing graphs to trees of consistent leaves.

An inconsistent graph is reduced one vertex at a time: a non-extreme vertex
is deleted outright, otherwise a minimal inconsistent path is broken at each
of its vertices.  Every deletion is recorded with the round-1-handle datum
(the pinched pair of unknots) needed to rebuild fillings of the parent from
fillings of the child.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from plumbjsj import _kernel
from plumbjsj.graph import (
    Path,
    PlumbingGraph,
    is_consistent,
    is_extreme,
    require_valid,
    sign,
    vertex_unknot,
)
from plumbjsj.unknot import UnknotDescriptor


class SizeLimitError(ValueError):
    """Brute-force subgraph enumeration refused: too many vertices."""


MAX_ORACLE_VERTICES = 22


@dataclass(frozen=True)
class NonExtreme:
    """Deletion rule: the vertex carried a non-extreme secondary weight."""

    def __str__(self) -> str:
        return "non-extreme"


@dataclass(frozen=True)
class PathBreak:
    """Deletion rule: vertex k (1-based) of a minimal inconsistent path."""

    path: Path
    index: int

    def __str__(self) -> str:
        verts = ",".join(str(v) for v in self.path.vertices)
        return f"path-break[{verts}] k={self.index}"


@dataclass(frozen=True)
class RoundHandleDatum:
    deleted_vertex: int
    deleted_decoration: tuple[int, int]
    rule: NonExtreme | PathBreak
    lambda_plus: UnknotDescriptor
    lambda_minus: UnknotDescriptor
    neighbor_edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        assert self.lambda_plus.s_minus == 0
        assert self.lambda_minus.s_plus == 0


@dataclass
class TreeNode:
    graph: PlumbingGraph
    consistent: bool


@dataclass(frozen=True)
class TreeEdge:
    parent: frozenset[int]
    child: frozenset[int]
    datum: RoundHandleDatum


@dataclass
class ReductionTree:
    root: PlumbingGraph
    nodes: dict[frozenset[int], TreeNode] = field(default_factory=dict)
    edges: list[TreeEdge] = field(default_factory=list)

    def leaves(self) -> list[tuple[int, ...]]:
        """Sorted vertex sets of the consistent nodes."""
        return sorted(
            tuple(sorted(s)) for s, node in self.nodes.items() if node.consistent
        )

    def children_of(self, vertex_set: frozenset[int]) -> list[TreeEdge]:
        return [e for e in self.edges if e.parent == vertex_set]


def non_extreme_vertices(g: PlumbingGraph) -> list[int]:
    """Ids of vertices whose secondary weight is not extreme, ascending."""
    require_valid(g)
    return sorted(v for v, (b, r) in g.vertices.items() if not is_extreme(b, r))


def minimal_inconsistent_paths(g: PlumbingGraph) -> list[Path]:
    """All inclusion-minimal inconsistent paths, one per reversal class.

    Only defined on all-extreme graphs (a non-extreme vertex is deleted by the
    other rule first).  A minimal inconsistent path has signed endpoints, a
    negative total product, and unsigned interior vertices; conversely every
    such path is minimal, since any proper sub-path acquires an unsigned
    endpoint.
    """
    require_valid(g)
    if non_extreme_vertices(g):
        raise ValueError("graph has non-extreme vertices; delete those first")
    adj = g.adjacency()
    sgn = {v: sign(r) for v, (b, r) in g.vertices.items()}
    found: dict[tuple[tuple[int, ...], bool], Path] = {}

    def record(vertices: tuple[int, ...], closed: bool, prod: int) -> None:
        if closed:
            # Same cycle discovered in both directions; keep the smaller.
            alt = (vertices[0],) + tuple(reversed(vertices[1:-1])) + (vertices[0],)
            vertices = min(vertices, alt)
        key = (min(vertices, tuple(reversed(vertices))), closed)
        found.setdefault(key, Path(vertices, closed, prod))

    def extend(start: int, path: list[int], prod: int) -> None:
        v = path[-1]
        for w, s in adj[v]:
            p = prod * s
            if w == start:
                if len(path) >= 3 and p < 0:
                    record(tuple(path) + (start,), True, p)
                continue
            if w in path:
                continue
            if sgn[w] != 0:
                if w > start and sgn[start] * p * sgn[w] < 0:
                    record(tuple(path) + (w,), False, p)
                continue
            path.append(w)
            extend(start, path, p)
            path.pop()

    for start in sorted(v for v in g.vertices if sgn[v] != 0):
        extend(start, [start], 1)

    return sorted(found.values(), key=lambda p: (tuple(sorted(set(p.vertices))), p.vertices))


def _datum(g: PlumbingGraph, v: int, rule) -> RoundHandleDatum:
    b, r = g.vertices[v]
    lam_plus, lam_minus = vertex_unknot(b, r).split()
    nbr = tuple(sorted((min(v, w), max(v, w), s) for w, s in g.adjacency()[v]))
    return RoundHandleDatum(v, (b, r), rule, lam_plus, lam_minus, nbr)


def children_for_path(
    g: PlumbingGraph, path: Path
) -> list[tuple[PlumbingGraph, RoundHandleDatum]]:
    """One child per breaking position along the path, deduplicated by the
    deleted vertex (a closed path names its base twice)."""
    out = []
    seen: set[int] = set()
    for k, v in enumerate(path.vertices, start=1):
        if v in seen:
            continue
        seen.add(v)
        out.append((g.delete_vertex(v), _datum(g, v, PathBreak(path, k))))
    return out


def reduction_children(
    g: PlumbingGraph,
) -> list[tuple[PlumbingGraph, RoundHandleDatum]]:
    """Children of an inconsistent graph under the default (deterministic)
    choices: least non-extreme vertex first, else the least minimal
    inconsistent path, broken at every position."""
    if is_consistent(g):
        raise ValueError("consistent graph has no reduction children")
    non_extreme = non_extreme_vertices(g)
    if non_extreme:
        v = non_extreme[0]
        return [(g.delete_vertex(v), _datum(g, v, NonExtreme()))]
    paths = minimal_inconsistent_paths(g)
    return children_for_path(g, paths[0])


def reduce_to_tree(g: PlumbingGraph, explore_all_paths: bool = False) -> ReductionTree:
    """Expand reduction children breadth-first until every leaf is consistent.

    Nodes are deduplicated globally by vertex set.  With explore_all_paths,
    every minimal inconsistent path contributes children, not just the least.
    """
    require_valid(g)
    tree = ReductionTree(root=g)
    root_set = frozenset(g.vertices)
    tree.nodes[root_set] = TreeNode(g, is_consistent(g))
    queue: deque[frozenset[int]] = deque([root_set])
    while queue:
        parent_set = queue.popleft()
        node = tree.nodes[parent_set]
        if node.consistent:
            continue
        non_extreme = non_extreme_vertices(node.graph)
        if non_extreme:
            v = non_extreme[0]
            pairs = [(node.graph.delete_vertex(v), _datum(node.graph, v, NonExtreme()))]
        else:
            paths = minimal_inconsistent_paths(node.graph)
            if not explore_all_paths:
                paths = paths[:1]
            pairs = []
            seen_children: set[frozenset[int]] = set()
            for path in paths:
                for child, datum in children_for_path(node.graph, path):
                    child_set = frozenset(child.vertices)
                    if child_set in seen_children:
                        continue
                    seen_children.add(child_set)
                    pairs.append((child, datum))
        for child, datum in pairs:
            child_set = frozenset(child.vertices)
            tree.edges.append(TreeEdge(parent_set, child_set, datum))
            if child_set not in tree.nodes:
                tree.nodes[child_set] = TreeNode(child, is_consistent(child))
                queue.append(child_set)
    return tree


def maximal_consistent_subgraphs(g: PlumbingGraph) -> list[tuple[int, ...]]:
    """Vertex sets inducing maximal consistent subgraphs, by exhaustive subset
    enumeration.  This is the independent oracle for the reduction algorithm
    and is deliberately brute-force."""
    require_valid(g)
    ids, _, signs, extreme, edges = g.compact()
    n = len(ids)
    if n > MAX_ORACLE_VERTICES:
        raise SizeLimitError(
            f"subset enumeration limited to {MAX_ORACLE_VERTICES} vertices, got {n}"
        )
    masks = _kernel.maximal_consistent_masks(n, extreme, signs, edges)
    return sorted(
        tuple(ids[i] for i in range(n) if mask >> i & 1) for mask in masks
    )
