"""Deterministic text and DOT rendering of reduction trees."""

from __future__ import annotations

from plumbjsj.reduction import NonExtreme, ReductionTree


def _set_str(vertex_set) -> str:
    return "{" + ",".join(str(v) for v in sorted(vertex_set)) + "}"


def _node_order(tree: ReductionTree) -> list[frozenset[int]]:
    return sorted(tree.nodes, key=lambda s: (-len(s), tuple(sorted(s))))


def render_report(tree: ReductionTree, oracle=None) -> str:
    """One block per node, then the leaves, then (optionally) the oracle's
    maximal consistent subgraphs.  Byte-identical across runs."""
    lines = []
    for vertex_set in _node_order(tree):
        node = tree.nodes[vertex_set]
        status = "consistent" if node.consistent else "inconsistent"
        lines.append(f"node {_set_str(vertex_set)} status={status}")
        for edge in sorted(
            tree.children_of(vertex_set), key=lambda e: tuple(sorted(e.child))
        ):
            d = edge.datum
            lines.append(
                f"  child {_set_str(edge.child)} delete={d.deleted_vertex}"
                f" rule={d.rule} lambda+={d.lambda_plus} lambda-={d.lambda_minus}"
            )
    lines.append("leaves:")
    for leaf in tree.leaves():
        lines.append(f"  {_set_str(leaf)}")
    if oracle is not None:
        lines.append("oracle:")
        for subset in oracle:
            lines.append(f"  {_set_str(subset)}")
    return "\n".join(lines) + "\n"


def emit_dot(tree: ReductionTree) -> str:
    """Render the reduction tree in the DOT language, stable across runs."""
    order = _node_order(tree)
    ids = {vertex_set: f"n{i}" for i, vertex_set in enumerate(order)}
    lines = ["digraph reduction {"]
    for vertex_set in order:
        node = tree.nodes[vertex_set]
        status = "consistent" if node.consistent else "inconsistent"
        lines.append(
            f'  {ids[vertex_set]} [label="{_set_str(vertex_set)}\\n{status}"];'
        )
    for vertex_set in order:
        for edge in sorted(
            tree.children_of(vertex_set), key=lambda e: tuple(sorted(e.child))
        ):
            rule = (
                "non-extreme"
                if isinstance(edge.datum.rule, NonExtreme)
                else "path-break"
            )
            lines.append(
                f"  {ids[edge.parent]} -> {ids[edge.child]}"
                f' [label="delete v={edge.datum.deleted_vertex} ({rule})"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
