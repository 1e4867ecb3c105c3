"""Exhaustive generators: labeled trees, bicyclic graphs, switching classes.

Bicyclic graphs are streamed as (base 2-core shape) x (sequences of leaf
attachments), which reaches every isomorphism class at least once but may
repeat classes; consumers that need one representative per class
de-duplicate with :mod:`signed_nullity.canonical`.  All streams are in a
fixed deterministic order.
"""

from __future__ import annotations

import heapq
import os
from itertools import combinations, product
from typing import Iterator

from .graphs import SignedGraph, _spanning_forest, is_connected

SOFT_ORDER_LIMIT = 8  # larger sweeps work but take noticeably longer
DEFAULT_ORDER_CEILING = 10
CEILING_ENV_VAR = "SIGNED_NULLITY_MAX_N"


def enumeration_ceiling() -> int:
    """Largest order the enumeration entry points accept.

    Defaults to 10; the environment variable SIGNED_NULLITY_MAX_N overrides
    it (sweeps beyond 10 get expensive fast).
    """
    raw = os.environ.get(CEILING_ENV_VAR)
    if raw is None:
        return DEFAULT_ORDER_CEILING
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{CEILING_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{CEILING_ENV_VAR} must be positive")
    return value


def check_order(n: int) -> None:
    ceiling = enumeration_ceiling()
    if n > ceiling:
        raise ValueError(f"order {n} exceeds the enumeration ceiling {ceiling}")


def prufer_graph(n: int, seq: tuple[int, ...]) -> SignedGraph:
    """Decode a length n-2 sequence over 0..n-1 into its labeled tree."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        v = heapq.heappop(leaves)
        edges.append((min(v, x), max(v, x), 1))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v), 1))
    edges.sort()
    return SignedGraph(n, tuple(edges))


def labeled_trees(n: int) -> Iterator[SignedGraph]:
    """All n^(n-2) labeled trees on n vertices, all-positive.

    Signs on forests are immaterial (every signature of a forest is
    switching-equivalent to all-positive), so one signature suffices.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        yield SignedGraph(1, ())
    elif n == 2:
        yield SignedGraph(2, ((0, 1, 1),))
    else:
        for seq in product(range(n), repeat=n - 2):
            yield prufer_graph(n, seq)


BaseShape = tuple[str, int, int, int]  # (kind, p, q, l)


def base_order(shape: BaseShape) -> int:
    kind, p, q, l = shape
    return p + q + l - 2 if kind == "infinity" else p + q + l - 1


def bicyclic_base_shapes(max_order: int) -> list[BaseShape]:
    """All infinity/theta core shapes with at most ``max_order`` vertices."""
    shapes: list[BaseShape] = []
    for p in range(3, max_order + 1):
        for q in range(p, max_order + 1):
            for l in range(1, max_order + 1):
                if p + q + l - 2 <= max_order:
                    shapes.append(("infinity", p, q, l))
    for p in range(1, max_order + 2):
        for q in range(1, p + 1):
            for l in range(1, q + 1):
                if q >= 2 and p + q + l - 1 <= max_order:
                    shapes.append(("theta", p, q, l))
    shapes.sort()
    return shapes


def base_graph(shape: BaseShape) -> SignedGraph:
    """Canonical all-positive layout of a core shape."""
    kind, p, q, l = shape
    edges: list[tuple[int, int, int]] = []

    def chain(points: list[int]) -> None:
        for a, b in zip(points, points[1:]):
            edges.append((min(a, b), max(a, b), 1))

    if kind == "infinity":
        if l == 1:
            n = p + q - 1
            left = [0] + list(range(1, p))
            right = [0] + list(range(p, n))
            chain(left + [0])
            chain(right + [0])
        else:
            n = p + q + l - 2
            u, v = 0, 1
            left = [u] + list(range(2, p + 1))
            chain(left + [u])
            right = [v] + list(range(p + 1, p + q))
            chain(right + [v])
            path = [u] + list(range(p + q, n)) + [v]
            chain(path)
    else:
        n = p + q + l - 1
        u, v = 0, 1
        nxt = 2
        for length in (p, q, l):
            inner = list(range(nxt, nxt + length - 1))
            nxt += length - 1
            chain([u] + inner + [v])
    edges.sort()
    return SignedGraph(n, tuple(edges))


def _with_leaves(g: SignedGraph, target: int) -> Iterator[SignedGraph]:
    if g.order == target:
        yield g
        return
    new = g.order
    for anchor in range(g.order):
        grown = SignedGraph(g.order + 1, tuple(sorted(g.edges + ((anchor, new, 1),))))
        yield from _with_leaves(grown, target)


def bicyclic_underlying(n: int, shapes: list[BaseShape] | None = None) -> Iterator[SignedGraph]:
    """Stream of connected all-positive graphs with n vertices and n+1 edges.

    Every isomorphism class appears at least once; duplicates are allowed.
    A ``shapes`` subset restricts the stream to the given cores (used to
    split the stream into independent chunks).
    """
    if n < 4:
        raise ValueError("the smallest bicyclic graph has 4 vertices")
    if shapes is None:
        shapes = bicyclic_base_shapes(n)
    for shape in shapes:
        if base_order(shape) <= n:
            yield from _with_leaves(base_graph(shape), n)


def signature_representatives(g: SignedGraph) -> Iterator[SignedGraph]:
    """One signed graph per switching class of g's underlying graph.

    Fixing a spanning tree all-positive leaves the non-tree edge signs as a
    complete switching invariant (they are the fundamental cycle signs), so
    the 2^c sign patterns on non-tree edges meet every class exactly once.
    """
    if not is_connected(g):
        raise ValueError("switching-class enumeration needs a connected graph")
    _, _, non_tree = _spanning_forest(g)
    free = {(u, v) for u, v, _ in non_tree}
    fixed = [(u, v) for u, v, _ in g.edges]
    free_positions = [i for i, pair in enumerate(fixed) if pair in free]
    base = [(u, v, 1) for u, v in fixed]
    for pattern in product((1, -1), repeat=len(free_positions)):
        edges = base[:]
        for where, sign in zip(free_positions, pattern):
            u, v, _ = edges[where]
            edges[where] = (u, v, sign)
        yield SignedGraph(g.order, tuple(edges))


def _edges_connected(n: int, pairs: tuple[tuple[int, int], ...]) -> bool:
    if n <= 1:
        return True
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    merged = 0
    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            merged += 1
    return merged == n - 1


def connected_labeled_graphs(n: int, edge_count: int | None = None) -> Iterator[SignedGraph]:
    """All connected all-positive graphs on n labeled vertices.

    With ``edge_count`` given, only graphs with that many edges (the unit
    used to chunk rank sweeps).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    all_pairs = list(combinations(range(n), 2))
    counts = range(max(n - 1, 0), len(all_pairs) + 1) if edge_count is None else [edge_count]
    for m in counts:
        for pairs in combinations(all_pairs, m):
            if _edges_connected(n, pairs):
                yield SignedGraph(n, tuple((u, v, 1) for u, v in pairs))
