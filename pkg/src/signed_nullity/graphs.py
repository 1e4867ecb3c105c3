"""Signed graphs: construction, adjacency matrices, cycle signs, switching, balance.

A signed graph is a simple undirected graph whose edges carry a sign of +1 or
-1.  Vertices are dense integer ids ``0..order-1`` and graphs are immutable
values: every transformation returns a new graph, so instances are hashable
and safe to share between threads or worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

Sign = int  # restricted to +1 / -1 at every construction boundary
Edge = tuple[int, int, int]  # (u, v, sign) with u < v
Cycle = tuple[int, ...]  # vertex sequence, closed implicitly


def _check_sign(s: int) -> int:
    if s != 1 and s != -1:
        raise ValueError(f"edge sign must be +1 or -1, got {s!r}")
    return s


@dataclass(frozen=True)
class SignedGraph:
    """Immutable signed graph on vertices ``0..order-1``.

    ``edges`` is the canonical edge set: each entry is ``(u, v, sign)`` with
    ``u < v`` and entries sorted, so equal graphs have identical
    representations (and serializations).
    """

    order: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("order must be non-negative")
        seen: set[tuple[int, int]] = set()
        prev: Optional[tuple[int, int]] = None
        for u, v, s in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                raise ValueError(f"edge ({u},{v}) not normalized (need u < v)")
            if not (0 <= u and v < self.order):
                raise ValueError(f"edge ({u},{v}) out of range for order {self.order}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
            if prev is not None and prev > (u, v):
                raise ValueError("edge list not sorted")
            prev = (u, v)
            _check_sign(s)

    @cached_property
    def _neighbor_signs(self) -> tuple[dict[int, int], ...]:
        table: tuple[dict[int, int], ...] = tuple({} for _ in range(self.order))
        for u, v, s in self.edges:
            table[u][v] = s
            table[v][u] = s
        return table

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self._neighbor_signs[v]))

    def degree(self, v: int) -> int:
        return len(self._neighbor_signs[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_signs[u]

    def sign_of(self, u: int, v: int) -> int:
        try:
            return self._neighbor_signs[u][v]
        except KeyError:
            raise ValueError(f"no edge ({u},{v})") from None

    def underlying(self) -> "SignedGraph":
        """The same graph with every sign set to +1."""
        return SignedGraph(self.order, tuple((u, v, 1) for u, v, _ in self.edges))

    def is_all_positive(self) -> bool:
        return all(s == 1 for _, _, s in self.edges)

    def vertices(self) -> range:
        return range(self.order)


def build_graph(order: int, edges: Iterable[tuple[int, int, int]]) -> SignedGraph:
    """Build a normalized SignedGraph from an arbitrary edge list.

    Endpoint order within an edge does not matter; duplicates (even with a
    different sign) and self-loops are rejected.
    """
    normalized = []
    for u, v, s in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if u > v:
            u, v = v, u
        if not (0 <= u and v < order):
            raise ValueError(f"edge ({u},{v}) out of range for order {order}")
        normalized.append((u, v, _check_sign(s)))
    normalized.sort()
    for a, b in zip(normalized, normalized[1:]):
        if a[:2] == b[:2]:
            raise ValueError(f"duplicate edge ({a[0]},{a[1]})")
    return SignedGraph(order, tuple(normalized))


def adjacency_matrix(g: SignedGraph) -> list[list[int]]:
    """Symmetric order x order matrix with entry (i,j) = sign of edge ij, else 0."""
    n = g.order
    m = [[0] * n for _ in range(n)]
    for u, v, s in g.edges:
        m[u][v] = s
        m[v][u] = s
    return m


def cycle_sign(g: SignedGraph, cycle: Sequence[int]) -> int:
    """Product of the edge signs along a closed cycle of ``g``."""
    k = len(cycle)
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    if len(set(cycle)) != k:
        raise ValueError("cycle vertices must be distinct")
    sign = 1
    for i in range(k):
        u, v = cycle[i], cycle[(i + 1) % k]
        sign *= g.sign_of(u, v)  # raises if the pair is not an edge
    return sign


def switch(g: SignedGraph, theta: Sequence[int]) -> SignedGraph:
    """Resign every edge uv to ``theta[u] * sign(uv) * theta[v]``."""
    if len(theta) != g.order:
        raise ValueError(f"switching function has length {len(theta)}, graph has order {g.order}")
    for t in theta:
        _check_sign(t)
    return SignedGraph(g.order, tuple((u, v, theta[u] * s * theta[v]) for u, v, s in g.edges))


@dataclass(frozen=True)
class BalanceWitness:
    """Outcome of a balance test, always carrying a checkable certificate.

    Balanced graphs come with a switching function that makes every edge
    positive; unbalanced graphs come with a concrete negative cycle.
    """

    balanced: bool
    switching: Optional[tuple[int, ...]] = None
    negative_cycle: Optional[Cycle] = None


def _spanning_forest(g: SignedGraph) -> tuple[list[int], list[int], list[tuple[int, int, int]]]:
    """BFS spanning forest rooted at the lowest id of each component.

    Returns (parent, depth, non_tree_edges).  parent[root] == -1.  The
    traversal (lowest unvisited root, neighbors in ascending order) is fixed
    so every derived object -- switching witnesses, fundamental cycles,
    signature representatives -- is reproducible.
    """
    n = g.order
    parent = [-2] * n  # -2 = unvisited, -1 = root
    depth = [0] * n
    tree_pairs: set[tuple[int, int]] = set()
    for root in range(n):
        if parent[root] != -2:
            continue
        parent[root] = -1
        queue = [root]
        while queue:
            nxt: list[int] = []
            for u in queue:
                for v in g.neighbors(u):
                    if parent[v] == -2:
                        parent[v] = u
                        depth[v] = depth[u] + 1
                        tree_pairs.add((min(u, v), max(u, v)))
                        nxt.append(v)
            queue = sorted(nxt)
    non_tree = [(u, v, s) for u, v, s in g.edges if (u, v) not in tree_pairs]
    return parent, depth, non_tree


def _tree_path_cycle(parent: list[int], depth: list[int], u: int, v: int) -> Cycle:
    """Fundamental cycle closed by the non-tree edge uv: u .. lca .. v."""
    up, vp = u, v
    left, right = [up], [vp]
    while depth[up] > depth[vp]:
        up = parent[up]
        left.append(up)
    while depth[vp] > depth[up]:
        vp = parent[vp]
        right.append(vp)
    while up != vp:
        up = parent[up]
        vp = parent[vp]
        left.append(up)
        right.append(vp)
    right.pop()  # drop the duplicated meeting vertex
    return tuple(left + right[::-1])


def fundamental_cycles(g: SignedGraph) -> list[Cycle]:
    """One cycle per non-tree edge of the fixed spanning forest.

    The list has ``|E| - order + #components`` entries, ordered by the
    closing edge's position in the canonical edge list.
    """
    parent, depth, non_tree = _spanning_forest(g)
    return [_tree_path_cycle(parent, depth, u, v) for u, v, _ in non_tree]


def _forest_switching(g: SignedGraph, parent: list[int], depth: list[int]) -> list[int]:
    """Switching that turns every tree edge of the given forest positive."""
    theta = [1] * g.order
    # resolve parents before children
    for v in sorted(range(g.order), key=depth.__getitem__):
        if parent[v] >= 0:
            theta[v] = theta[parent[v]] * g.sign_of(parent[v], v)
    return theta


def is_balanced(g: SignedGraph) -> BalanceWitness:
    """Balance test with certificate.

    A spanning-forest traversal assigns a switching function that makes all
    tree edges positive; a non-tree edge that stays negative closes a
    negative fundamental cycle, which is returned as the witness.
    """
    parent, depth, non_tree = _spanning_forest(g)
    theta = _forest_switching(g, parent, depth)
    for u, v, s in non_tree:
        if theta[u] * s * theta[v] == -1:
            return BalanceWitness(balanced=False, negative_cycle=_tree_path_cycle(parent, depth, u, v))
    return BalanceWitness(balanced=True, switching=tuple(theta))


def same_underlying(g1: SignedGraph, g2: SignedGraph) -> bool:
    return g1.order == g2.order and tuple(e[:2] for e in g1.edges) == tuple(e[:2] for e in g2.edges)


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> Optional[tuple[int, ...]]:
    """A switching function taking g1 to g2, or None if none exists.

    g1 and g2 must share the same labeled underlying graph.  theta works iff
    switching the edgewise sign product ``sign1 * sign2`` to all-positive
    works, so this reduces to a balance test on that product graph.
    """
    if not same_underlying(g1, g2):
        raise ValueError("graphs have different underlying graphs")
    product = SignedGraph(
        g1.order,
        tuple((u, v, s1 * g2.sign_of(u, v)) for u, v, s1 in g1.edges),
    )
    witness = is_balanced(product)
    return witness.switching if witness.balanced else None


def induced_subgraph(g: SignedGraph, keep: Iterable[int]) -> SignedGraph:
    """Induced subgraph on ``keep``, relabeled order-preservingly to dense ids."""
    kept = sorted(set(keep))
    for v in kept:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex {v} out of range")
    relabel = {v: i for i, v in enumerate(kept)}
    edges = tuple(
        (relabel[u], relabel[v], s)
        for u, v, s in g.edges
        if u in relabel and v in relabel
    )
    return SignedGraph(len(kept), edges)


def compaction_map(order: int, removed: Iterable[int]) -> tuple[int, ...]:
    """Old-id -> new-id map after deleting ``removed`` (-1 marks removal)."""
    gone = set(removed)
    out = []
    nxt = 0
    for v in range(order):
        if v in gone:
            out.append(-1)
        else:
            out.append(nxt)
            nxt += 1
    return tuple(out)


def connected_components(g: SignedGraph) -> list[tuple[int, ...]]:
    parent, _, _ = _spanning_forest(g)
    comp: dict[int, list[int]] = {}
    for v in range(g.order):
        root = v
        while parent[root] >= 0:
            root = parent[root]
        comp.setdefault(root, []).append(v)
    return [tuple(sorted(vs)) for vs in sorted(comp.values())]


def is_connected(g: SignedGraph) -> bool:
    return g.order <= 1 or len(connected_components(g)) == 1


def disjoint_union(g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    shift = g1.order
    edges = g1.edges + tuple((u + shift, v + shift, s) for u, v, s in g2.edges)
    return SignedGraph(g1.order + g2.order, edges)
