"""Graph isomorphism by invariant refinement plus backtracking.

Exact for the orders this package works at (n <= 64).  Strongly regular
graphs defeat plain color refinement, so the fingerprint adds local
structure (triangle counts, neighborhood components) and the backtracking
relies on adjacency consistency with an order that keeps each new vertex
attached to the part already mapped.
"""

from __future__ import annotations

from typing import Optional

from .graphs import Graph, bits_to_vertices


def _neighborhood_components(g: Graph, u: int) -> int:
    nbrs = g.neighbors(u)
    seen: set[int] = set()
    components = 0
    for start in nbrs:
        if start in seen:
            continue
        components += 1
        stack = [start]
        seen.add(start)
        while stack:
            x = stack.pop()
            for y in nbrs:
                if y not in seen and g.adjacent(x, y):
                    seen.add(y)
                    stack.append(y)
    return components


def invariant_fingerprint(g: Graph) -> tuple:
    """Cheap isomorphism invariant; unequal fingerprints mean non-isomorphic."""
    degrees = sorted(g.degrees())
    triangles = []
    for u in range(g.n):
        row = g.row(u)
        t = sum((row & g.row(v)).bit_count() for v in bits_to_vertices(row))
        triangles.append(t // 2)
    nbhd_components = sorted(_neighborhood_components(g, u) for u in range(g.n))
    return (g.n, g.edge_count(), tuple(degrees), tuple(sorted(triangles)), tuple(nbhd_components))


def _refined_colors(g: Graph) -> list[int]:
    colors = g.degrees()
    for _ in range(g.n):
        signatures = []
        for u in range(g.n):
            nbr_colors = sorted(colors[v] for v in g.neighbors(u))
            signatures.append((colors[u], tuple(nbr_colors)))
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        new = [palette[sig] for sig in signatures]
        if new == colors:
            break
        colors = new
    return colors


def _search_order(g: Graph, colors: list[int]) -> list[int]:
    """Order vertices so each new one has many neighbors among earlier ones."""
    class_size: dict[int, int] = {}
    for c in colors:
        class_size[c] = class_size.get(c, 0) + 1
    remaining = set(range(g.n))
    start = min(remaining, key=lambda u: (class_size[colors[u]], -g.degree(u), u))
    order = [start]
    placed = 1 << start
    remaining.remove(start)
    while remaining:
        nxt = max(
            remaining,
            key=lambda u: ((g.row(u) & placed).bit_count(), g.degree(u), -u),
        )
        order.append(nxt)
        placed |= 1 << nxt
        remaining.remove(nxt)
    return order


def is_isomorphic(g: Graph, h: Graph) -> Optional[list[int]]:
    """Return a vertex bijection phi with g(u,v) edge iff h(phi u, phi v), or None."""
    if g.n != h.n:
        return None
    if invariant_fingerprint(g) != invariant_fingerprint(h):
        return None
    g_colors = _refined_colors(g)
    h_colors = _refined_colors(h)
    if sorted(g_colors) != sorted(h_colors):
        return None

    order = _search_order(g, g_colors)
    n = g.n
    mapping = [-1] * n
    used = [False] * n
    h_by_color: dict[int, list[int]] = {}
    for w in range(n):
        h_by_color.setdefault(h_colors[w], []).append(w)

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        u = order[idx]
        for w in h_by_color.get(g_colors[u], ()):
            if used[w]:
                continue
            ok = True
            for j in range(idx):
                v = order[j]
                if g.adjacent(u, v) != h.adjacent(w, mapping[v]):
                    ok = False
                    break
            if ok:
                mapping[u] = w
                used[w] = True
                if extend(idx + 1):
                    return True
                used[w] = False
                mapping[u] = -1
        return False

    if extend(0):
        return mapping
    return None
