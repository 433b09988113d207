"""The exhaustive test family: path, cycle, star, and path-plus-pendant
shapes on up to 6 vertices, with all good decorations drawn from
b in {-2, -3, -4} and every edge-sign assignment.

Decorations with equal secondary-weight sign and extremeness behave
identically under every consistency and reduction routine, so enumeration
helpers expose (sign, extreme) classes with multiplicities alongside the
raw decoration lists.
"""

from __future__ import annotations

from itertools import product

MAX_VERTICES = 6
B_MIN = -4


def shapes():
    """Yield (name, n, edges) for every shape in the family; edges unsigned."""
    for n in range(1, MAX_VERTICES + 1):
        yield f"path{n}", n, [(i, i + 1) for i in range(n - 1)]
    for n in range(3, MAX_VERTICES + 1):
        yield f"cycle{n}", n, [(i, (i + 1) % n) for i in range(n)]
    for n in range(4, MAX_VERTICES + 1):
        yield f"star{n}", n, [(0, i) for i in range(1, n)]
    for n in range(4, MAX_VERTICES + 1):
        base = [(i, i + 1) for i in range(n - 2)]
        for hub in range(1, n - 2):
            yield f"pendant{n}_{hub}", n, base + [(hub, n - 1)]


def signed_shapes():
    """Every shape with every edge-sign assignment."""
    for name, n, edges in shapes():
        for signs in product((1, -1), repeat=len(edges)):
            yield name, n, [(u, v, s) for (u, v), s in zip(edges, signs)]


def decorations(degree: int, b_min: int = B_MIN) -> list[tuple[int, int]]:
    """All good decorations (b, r) for a vertex of the given degree."""
    out = []
    for b in range(-2, b_min - 1, -1):
        if b + degree > 0:
            continue
        out.extend((b, r) for r in range(b + 2, -b - 1, 2))
    return out


def sign_classes(degree: int, b_min: int = B_MIN) -> list[tuple[int, bool, int]]:
    """(sign, extreme, multiplicity) classes of the decorations for a vertex,
    with a deterministic class order."""
    counts: dict[tuple[int, bool], int] = {}
    for b, r in decorations(degree, b_min):
        sgn = (r > 0) - (r < 0)
        extreme = r == b + 2 or r == -(b + 2)
        key = (sgn, extreme)
        counts[key] = counts.get(key, 0) + 1
    return [(sgn, ext, m) for (sgn, ext), m in sorted(counts.items())]


def class_representative(degree: int, sgn: int, extreme: bool) -> tuple[int, int]:
    """One concrete decoration realizing a (sign, extreme) class."""
    for b, r in decorations(degree):
        if ((r > 0) - (r < 0)) == sgn and (r == b + 2 or r == -(b + 2)) == extreme:
            return b, r
    raise ValueError(f"no decoration with sign {sgn}, extreme={extreme}, degree {degree}")


def degrees(n: int, edges) -> list[int]:
    out = [0] * n
    for u, v, *_ in edges:
        out[u] += 1
        out[v] += 1
    return out
