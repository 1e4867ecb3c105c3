"""Nullity-preserving graph transformations.

Three operations shrink a signed graph without changing its nullity:
deleting a pendant vertex together with its neighbor, rewiring a neighbor of
a special path's endpoint across the path, and contracting a special path to
a single vertex.  The rewiring and contraction require the path's two edges
to carry signs (-1, +1); ``normalize_special_path`` reaches that pattern by
switching, which never changes the nullity either.

Every step is recorded in a replayable trace so reduction chains can be
audited.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graphs import SignedGraph, compaction_map, induced_subgraph, switch

SwitchingFunction = tuple[int, ...]


@dataclass(frozen=True)
class SpecialPath:
    """Path v1-v2-v3 with deg(v2)=2, v1v3 not an edge, and no common neighbor
    of v1 and v3 besides v2."""

    v1: int
    v2: int
    v3: int


@dataclass(frozen=True)
class PendantDeletion:
    pendant: int
    neighbor: int
    relabeling: tuple[int, ...]  # old id -> new id, -1 for the two removed


@dataclass(frozen=True)
class Switching:
    signs: tuple[int, ...]


@dataclass(frozen=True)
class PathContraction:
    v1: int
    v2: int
    v3: int
    merged: int  # id of the merged vertex in the result
    relabeling: tuple[int, ...]


ReductionStep = Union[PendantDeletion, Switching, PathContraction]


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...]


def find_pendants(g: SignedGraph) -> list[tuple[int, int]]:
    """All (pendant vertex, unique neighbor) pairs, sorted by pendant id."""
    return [(v, g.neighbors(v)[0]) for v in range(g.order) if g.degree(v) == 1]


def delete_pendant_pair(g: SignedGraph, v: int, u: int) -> SignedGraph:
    """Delete pendant v and its neighbor u; the nullity does not change."""
    if not (0 <= v < g.order) or g.degree(v) != 1 or g.neighbors(v)[0] != u:
        raise ValueError(f"({v},{u}) is not a pendant pair")
    return induced_subgraph(g, (w for w in range(g.order) if w != v and w != u))


def is_special_path(g: SignedGraph, p: SpecialPath) -> bool:
    v1, v2, v3 = p.v1, p.v2, p.v3
    if len({v1, v2, v3}) != 3:
        return False
    if not (g.has_edge(v1, v2) and g.has_edge(v2, v3)):
        return False
    if g.degree(v2) != 2 or g.has_edge(v1, v3):
        return False
    shared = set(g.neighbors(v1)) & set(g.neighbors(v3))
    return shared <= {v2}


def find_special_paths(g: SignedGraph) -> list[SpecialPath]:
    """Every special path, both orientations, in lexicographic order."""
    found = []
    for v2 in range(g.order):
        if g.degree(v2) != 2:
            continue
        a, b = g.neighbors(v2)
        if g.has_edge(a, b):
            continue
        if set(g.neighbors(a)) & set(g.neighbors(b)) <= {v2}:
            found.append(SpecialPath(a, v2, b))
            found.append(SpecialPath(b, v2, a))
    found.sort(key=lambda p: (p.v1, p.v2, p.v3))
    return found


def normalize_special_path(g: SignedGraph, p: SpecialPath) -> tuple[SignedGraph, SwitchingFunction]:
    """Switch at the path ends so that sign(v1v2) = -1 and sign(v2v3) = +1.

    Since v1v3 is not an edge, flipping v1 only affects the first path edge
    and flipping v3 only the second, so every sign pattern is reachable.
    """
    if not is_special_path(g, p):
        raise ValueError(f"{p} is not a special path")
    theta = [1] * g.order
    if g.sign_of(p.v1, p.v2) == 1:
        theta[p.v1] = -1
    if g.sign_of(p.v2, p.v3) == -1:
        theta[p.v3] = -1
    return switch(g, theta), tuple(theta)


def _require_normalized(g: SignedGraph, p: SpecialPath) -> None:
    if not is_special_path(g, p):
        raise ValueError(f"{p} is not a special path")
    if g.sign_of(p.v1, p.v2) != -1 or g.sign_of(p.v2, p.v3) != 1:
        raise ValueError("special path is not normalized to signs (-1, +1)")


def rewire_special_path(g: SignedGraph, p: SpecialPath, v: int) -> SignedGraph:
    """Move the edge vv1 to vv3, keeping its sign; the nullity is preserved.

    Requires the normalized sign pattern on the path and v a neighbor of v1
    other than v2.
    """
    _require_normalized(g, p)
    if v == p.v2 or not g.has_edge(v, p.v1):
        raise ValueError(f"vertex {v} is not an eligible neighbor of {p.v1}")
    if g.has_edge(v, p.v3):
        raise ValueError(f"edge ({v},{p.v3}) already present")
    s = g.sign_of(v, p.v1)
    edges = [e for e in g.edges if {e[0], e[1]} != {v, p.v1}]
    edges.append((min(v, p.v3), max(v, p.v3), s))
    edges.sort()
    return SignedGraph(g.order, tuple(edges))


def contract_special_path(g: SignedGraph, p: SpecialPath) -> SignedGraph:
    """Contract a normalized special path to one vertex; nullity is preserved.

    The merged vertex keeps every edge of v1 and v3 (their neighborhoods are
    disjoint apart from v2) with the original signs, takes the smallest of
    the three freed ids, and the remaining vertices are compacted
    order-preservingly.
    """
    _require_normalized(g, p)
    v1, v2, v3 = p.v1, p.v2, p.v3
    merged_old = min(v1, v2, v3)
    removed = {v1, v2, v3} - {merged_old}
    relabel = compaction_map(g.order, removed)
    edges = []
    for u, v, s in g.edges:
        if u in (v1, v2, v3) and v in (v1, v2, v3):
            continue
        if u in (v1, v3):
            u = merged_old
        if v in (v1, v3):
            v = merged_old
        a, b = relabel[u], relabel[v]
        if a > b:
            a, b = b, a
        edges.append((a, b, s))
    edges.sort()
    return SignedGraph(g.order - 2, tuple(edges))


def _contraction_relabeling(order: int, p: SpecialPath) -> tuple[int, ...]:
    merged_old = min(p.v1, p.v2, p.v3)
    removed = {p.v1, p.v2, p.v3} - {merged_old}
    base = compaction_map(order, removed)
    out = list(base)
    out[p.v1] = base[merged_old]
    out[p.v2] = base[merged_old]
    out[p.v3] = base[merged_old]
    return tuple(out)


def contract_special_path_step(g: SignedGraph, p: SpecialPath) -> tuple[SignedGraph, PathContraction]:
    """Contraction plus its trace record."""
    result = contract_special_path(g, p)
    relabeling = _contraction_relabeling(g.order, p)
    return result, PathContraction(p.v1, p.v2, p.v3, relabeling[p.v1], relabeling)


def reduce(g: SignedGraph) -> tuple[SignedGraph, ReductionTrace]:
    """Delete pendant pairs until none remain, smallest pendant first.

    Each round removes the lexicographically least pendant pair, so the
    result is reproducible; the nullity never changes along the trace.
    """
    steps: list[ReductionStep] = []
    current = g
    while True:
        pendants = find_pendants(current)
        if not pendants:
            return current, ReductionTrace(tuple(steps))
        v, u = pendants[0]
        steps.append(PendantDeletion(v, u, compaction_map(current.order, (v, u))))
        current = delete_pendant_pair(current, v, u)


def replay(initial: SignedGraph, trace: ReductionTrace) -> SignedGraph:
    """Re-run a trace from its initial graph."""
    current = initial
    for step in trace.steps:
        if isinstance(step, PendantDeletion):
            current = delete_pendant_pair(current, step.pendant, step.neighbor)
        elif isinstance(step, Switching):
            current = switch(current, step.signs)
        elif isinstance(step, PathContraction):
            current = contract_special_path(current, SpecialPath(step.v1, step.v2, step.v3))
        else:
            raise ValueError(f"unknown step {step!r}")
    return current
