"""Exhaustive verification sweeps and nullity catalogs.

Each sweep checks one classification statement over every enumerated
instance and reports the violations (an empty list is the expected
outcome).  Work is split into independent chunks -- one per base shape or
per (order, edge count) -- so sweeps can run on a process pool; results are
merged commutatively and sorted, which makes reports and catalogs
byte-identical regardless of the worker count.
"""

from __future__ import annotations

import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .canonical import canonical_form
from .enumeration import (
    SOFT_ORDER_LIMIT,
    BaseShape,
    base_order,
    bicyclic_base_shapes,
    bicyclic_underlying,
    check_order,
    connected_labeled_graphs,
    labeled_trees,
    prufer_graph,
    signature_representatives,
)
from .graphs import SignedGraph, adjacency_matrix, build_graph, cycle_sign, fundamental_cycles, is_balanced
from .graphio import serialize_graph
from .rank import cycle_nullity_formula, forest_nullity_formula, nullity, rank
from .recognizers import (
    BicyclicBase,
    bicyclic_base,
    low_rank_neighborhood_check,
    recognize_rank2,
    recognize_rank3,
    unbalanced_bicyclic_verdict,
)
from .reductions import (
    contract_special_path,
    delete_pendant_pair,
    find_pendants,
    find_special_paths,
    normalize_special_path,
)


@dataclass(frozen=True)
class Violation:
    """A failed instance, with a replayable witness graph."""

    order: int
    detail: str
    witness: str  # graph-file text


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    orders_checked: tuple[int, ...]
    instances_checked: int
    violations: tuple[Violation, ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.violations


# ---------------------------------------------------------------------------
# chunked execution

Chunk = tuple
ChunkResult = tuple[int, list[Violation]]


def _chunk_trees(n: int) -> ChunkResult:
    checked = 0
    violations = []
    for g in labeled_trees(n):
        checked += 1
        if forest_nullity_formula(g) != nullity(g):
            violations.append(
                Violation(n, "tree nullity formula disagrees with rank kernel", serialize_graph(g))
            )
    return checked, violations


def _chunk_trees_prefix(n: int, first: int) -> ChunkResult:
    checked = 0
    violations = []
    for rest in product(range(n), repeat=n - 3):
        g = prufer_graph(n, (first,) + rest)
        checked += 1
        if forest_nullity_formula(g) != nullity(g):
            violations.append(
                Violation(n, "tree nullity formula disagrees with rank kernel", serialize_graph(g))
            )
    return checked, violations


def _cycle_graph(length: int, balanced: bool) -> SignedGraph:
    edges = [(i, i + 1, 1) for i in range(length - 1)]
    edges.append((0, length - 1, 1 if balanced else -1))
    return build_graph(length, edges)


def _chunk_cycles(length: int) -> ChunkResult:
    checked = 0
    violations = []
    for balanced in (True, False):
        g = _cycle_graph(length, balanced)
        checked += 1
        if cycle_nullity_formula(length, balanced) != nullity(g):
            kind = "balanced" if balanced else "unbalanced"
            violations.append(
                Violation(length, f"{kind} cycle formula disagrees with rank kernel", serialize_graph(g))
            )
    return checked, violations


def _signed_connected(n: int, m: int) -> Iterator[SignedGraph]:
    for g in connected_labeled_graphs(n, m):
        yield from signature_representatives(g)


def _chunk_rank2(n: int, m: int) -> ChunkResult:
    checked = 0
    violations = []
    for rep in _signed_connected(n, m):
        checked += 1
        matches = recognize_rank2(rep).matches
        if matches != (rank(adjacency_matrix(rep)) == 2):
            violations.append(
                Violation(n, "rank-2 recognizer disagrees with rank kernel", serialize_graph(rep))
            )
    return checked, violations


def _chunk_rank3(n: int, m: int) -> ChunkResult:
    checked = 0
    violations = []
    for rep in _signed_connected(n, m):
        checked += 1
        r = rank(adjacency_matrix(rep))
        if recognize_rank3(rep).matches != (r == 3):
            violations.append(
                Violation(n, "rank-3 recognizer disagrees with rank kernel", serialize_graph(rep))
            )
        if r <= 3 and n >= 2:
            bad = [x for x in range(n) if not low_rank_neighborhood_check(rep, x)]
            if bad:
                violations.append(
                    Violation(
                        n,
                        f"neighborhood split check fails at vertices {bad} despite rank {r}",
                        serialize_graph(rep),
                    )
                )
    return checked, violations


def _is_star(g: SignedGraph) -> bool:
    return len(g.edges) == g.order - 1 and any(
        g.degree(v) == g.order - 1 for v in range(g.order)
    )


def _chunk_pendant_bound(n: int, m: int) -> ChunkResult:
    checked = 0
    violations = []
    for g in connected_labeled_graphs(n, m):
        if n < 4 or _is_star(g) or not find_pendants(g):
            continue
        for rep in signature_representatives(g):
            checked += 1
            if nullity(rep) > n - 4:
                violations.append(
                    Violation(n, "pendant vertex present but nullity exceeds n-4", serialize_graph(rep))
                )
    return checked, violations


def _chunk_bicyclic_bound(n: int, shape: BaseShape) -> ChunkResult:
    checked = 0
    violations = []
    for g in bicyclic_underlying(n, [shape]):
        for rep in signature_representatives(g):
            if is_balanced(rep).balanced:
                continue
            checked += 1
            verdict = unbalanced_bicyclic_verdict(rep)
            eta = nullity(rep)
            if not verdict.bound_holds:
                violations.append(
                    Violation(n, "unbalanced bicyclic graph with nullity above n-3", serialize_graph(rep))
                )
            if verdict.is_extremal != (eta == n - 3):
                violations.append(
                    Violation(
                        n,
                        f"extremal-shape verdict {verdict.is_extremal} but nullity is {eta}",
                        serialize_graph(rep),
                    )
                )
    return checked, violations


def _chunk_special_path_bound(n: int, shape: BaseShape) -> ChunkResult:
    checked = 0
    violations = []
    for g in bicyclic_underlying(n, [shape]):
        has_special = bool(find_special_paths(g))
        has_pendant = bool(find_pendants(g))
        if not has_special and not has_pendant:
            continue
        for rep in signature_representatives(g):
            checked += 1
            eta = nullity(rep)
            if has_special and eta > n - 4:
                violations.append(
                    Violation(n, "special path present but nullity exceeds n-4", serialize_graph(rep))
                )
            if has_pendant and eta > n - 4:
                violations.append(
                    Violation(n, "pendant vertex present but nullity exceeds n-4", serialize_graph(rep))
                )
    return checked, violations


def _chunk_reductions(n: int, shape: BaseShape) -> ChunkResult:
    checked = 0
    violations = []
    for g in bicyclic_underlying(n, [shape]):
        pendants = find_pendants(g)
        paths = find_special_paths(g)
        for rep in signature_representatives(g):
            checked += 1
            eta = nullity(rep)
            for v, u in pendants:
                if nullity(delete_pendant_pair(rep, v, u)) != eta:
                    violations.append(
                        Violation(n, f"pendant deletion ({v},{u}) changed the nullity", serialize_graph(rep))
                    )
            for p in paths:
                normalized, _ = normalize_special_path(rep, p)
                if nullity(contract_special_path(normalized, p)) != eta:
                    violations.append(
                        Violation(
                            n,
                            f"contraction of special path ({p.v1},{p.v2},{p.v3}) changed the nullity",
                            serialize_graph(rep),
                        )
                    )
    return checked, violations


def _chunk_classes(n: int, shape: BaseShape) -> list[tuple[str, tuple]]:
    out = {}
    for g in bicyclic_underlying(n, [shape]):
        code, canon = canonical_form(g)
        if code not in out:
            out[code] = canon.edges
    return sorted(out.items())


_CHUNK_KINDS = {
    "trees": _chunk_trees,
    "trees-prefix": _chunk_trees_prefix,
    "cycles": _chunk_cycles,
    "rank2": _chunk_rank2,
    "rank3": _chunk_rank3,
    "pendant-bound": _chunk_pendant_bound,
    "bicyclic-bound": _chunk_bicyclic_bound,
    "special-path-bound": _chunk_special_path_bound,
    "reductions": _chunk_reductions,
    "classes": _chunk_classes,
}


def _run_chunk(task: Chunk):
    kind = task[0]
    return _CHUNK_KINDS[kind](*task[1:])


def _run_tasks(tasks: list[Chunk], workers: int) -> list:
    if workers <= 1 or len(tasks) <= 1:
        return [_run_chunk(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_chunk, tasks))


# ---------------------------------------------------------------------------
# sweeps

def _tree_tasks(max_n: int) -> list[Chunk]:
    tasks: list[Chunk] = []
    for n in range(1, max_n + 1):
        if n <= 6:
            tasks.append(("trees", n))
        else:
            tasks.extend(("trees-prefix", n, first) for first in range(n))
    return tasks


def _connected_tasks(kind: str, max_n: int) -> list[Chunk]:
    tasks: list[Chunk] = []
    for n in range(1, max_n + 1):
        pairs = n * (n - 1) // 2
        tasks.extend((kind, n, m) for m in range(max(n - 1, 0), pairs + 1))
    return tasks


def _bicyclic_tasks(kind: str, max_n: int) -> list[Chunk]:
    tasks: list[Chunk] = []
    for n in range(4, max_n + 1):
        tasks.extend(
            (kind, n, shape) for shape in bicyclic_base_shapes(n) if base_order(shape) <= n
        )
    return tasks


_SWEEPS: dict[str, dict] = {
    "lemma2.1i": {
        "tasks": _tree_tasks,
        "orders": lambda max_n: range(1, max_n + 1),
        "min_n": 1,
        "describe": "nullity of every labeled signed tree equals n - 2*matching",
    },
    "lemma2.1ii": {
        "tasks": lambda max_n: [("cycles", length) for length in range(3, max_n + 1)],
        "orders": lambda max_n: range(3, max_n + 1),
        "min_n": 3,
        # linear work per length, so the enumeration ceiling does not apply;
        # still capped to keep a typo from launching cubic-cost giants
        "max_len": 128,
        "describe": "closed-form cycle nullity matches the rank kernel for both balance classes",
    },
    "theorem2.3": {
        "tasks": lambda max_n: _connected_tasks("rank2", max_n),
        "orders": lambda max_n: range(1, max_n + 1),
        "min_n": 1,
        "describe": "rank-2 recognizer agrees with the rank kernel on all connected signed graphs",
    },
    "theorem2.4": {
        "tasks": lambda max_n: _connected_tasks("rank3", max_n),
        "orders": lambda max_n: range(1, max_n + 1),
        "min_n": 1,
        "describe": "rank-3 recognizer agrees with the rank kernel; neighborhood split holds at rank <= 3",
    },
    "corollary2.6": {
        "tasks": lambda max_n: _connected_tasks("pendant-bound", max_n),
        "orders": lambda max_n: range(1, max_n + 1),
        "min_n": 1,
        "describe": "connected non-star graphs of order >= 4 with a pendant have nullity <= n-4",
    },
    "corollary2.9": {
        "tasks": lambda max_n: _bicyclic_tasks("special-path-bound", max_n),
        "orders": lambda max_n: range(4, max_n + 1),
        "min_n": 4,
        "describe": "bicyclic graphs with a special path or pendant have nullity <= n-4",
    },
    "theorem3.1": {
        "tasks": lambda max_n: _bicyclic_tasks("bicyclic-bound", max_n),
        "orders": lambda max_n: range(4, max_n + 1),
        "min_n": 4,
        "describe": "unbalanced bicyclic nullity is at most n-3, extremal exactly at the doubled-triangle shape",
    },
    "lemma2.5": {
        "tasks": lambda max_n: _bicyclic_tasks("reductions", max_n),
        "orders": lambda max_n: range(4, max_n + 1),
        "min_n": 4,
        "describe": "pendant deletions and special-path contractions preserve the nullity",
    },
}

_ALIASES = {
    "tree-nullity": "lemma2.1i",
    "cycle-nullity": "lemma2.1ii",
    "lemma2.1iii": "lemma2.1ii",
    "rank2": "theorem2.3",
    "rank3": "theorem2.4",
    "pendant-bound": "corollary2.6",
    "special-path-bound": "corollary2.9",
    "unbalanced-bicyclic": "theorem3.1",
    "reductions": "lemma2.5",
    "corollary2.8": "lemma2.5",
}


def available_theorems() -> list[tuple[str, str]]:
    """(canonical id, description) pairs for every supported sweep."""
    return [(key, spec["describe"]) for key, spec in sorted(_SWEEPS.items())]


def _resolve_theorem(theorem_id: str) -> str:
    key = theorem_id.strip().lower().replace(" ", "")
    key = _ALIASES.get(key, key)
    if key not in _SWEEPS:
        known = ", ".join(sorted(_SWEEPS))
        raise ValueError(f"unknown theorem id {theorem_id!r}; known ids: {known}")
    return key


def verify_theorem(theorem_id: str, max_n: int, workers: int = 1) -> TheoremReport:
    """Run one exhaustive sweep up to order (or cycle length) ``max_n``."""
    key = _resolve_theorem(theorem_id)
    spec = _SWEEPS[key]
    if "max_len" in spec:
        if max_n > spec["max_len"]:
            raise ValueError(f"sweep {key} supports max_n up to {spec['max_len']}")
    else:
        check_order(max_n)
        if max_n > SOFT_ORDER_LIMIT:
            warnings.warn(
                f"sweep {key} at n={max_n} is beyond the fast range (n <= {SOFT_ORDER_LIMIT}) "
                "and may take a long time",
                stacklevel=2,
            )
    if max_n < spec["min_n"]:
        raise ValueError(f"sweep {key} needs max_n >= {spec['min_n']}")
    start = time.perf_counter()
    results = _run_tasks(spec["tasks"](max_n), workers)
    checked = sum(r[0] for r in results)
    violations = sorted(
        (v for r in results for v in r[1]),
        key=lambda v: (v.order, v.witness, v.detail),
    )
    return TheoremReport(
        theorem=key,
        orders_checked=tuple(spec["orders"](max_n)),
        instances_checked=checked,
        violations=tuple(violations),
        elapsed=time.perf_counter() - start,
    )


def reduction_consistency_sweep(max_n: int, workers: int = 1) -> TheoremReport:
    """Check every pendant deletion and special-path contraction over the
    bicyclic enumeration; both must preserve the nullity everywhere."""
    return verify_theorem("lemma2.5", max_n, workers=workers)


# ---------------------------------------------------------------------------
# catalogs

BalanceProfile = tuple[tuple[int, int], ...]  # ((cycle length, sign) x 3), sorted


@dataclass(frozen=True)
class CatalogEntry:
    code: str
    base: BicyclicBase
    profiles: tuple[BalanceProfile, ...]
    achieving_classes: int
    witness: SignedGraph


@dataclass(frozen=True)
class NullityCatalog:
    order: int
    k: int
    nullity: int
    balanced_only: bool
    entries: tuple[CatalogEntry, ...]


def bicyclic_classes(n: int, workers: int = 1) -> dict[str, SignedGraph]:
    """Canonical code -> canonical graph for every bicyclic class of order n."""
    check_order(n)
    tasks: list[Chunk] = [
        ("classes", n, shape) for shape in bicyclic_base_shapes(n) if base_order(shape) <= n
    ]
    merged: dict[str, SignedGraph] = {}
    for chunk in _run_tasks(tasks, workers):
        for code, edges in chunk:
            if code not in merged:
                merged[code] = SignedGraph(n, edges)
    return merged


def catalog_nullity_classes(
    n: int, k: int, balanced_only: bool = False, workers: int = 1
) -> NullityCatalog:
    """Catalog every bicyclic class of order n that reaches nullity n-k.

    Each entry records which of the four switching classes achieve the
    nullity, as balance profiles over the base's two fundamental cycles and
    their edge-set sum; the witness revalidates through the rank kernel.
    """
    if not 3 <= k <= n:
        raise ValueError(f"need 3 <= k <= n, got k={k}, n={n}")
    if n < 4:
        raise ValueError("the smallest bicyclic graph has 4 vertices")
    classes = bicyclic_classes(n, workers)
    entries = []
    for code in sorted(classes):
        canon = classes[code]
        base = bicyclic_base(canon)
        assert base is not None
        c1, c2 = fundamental_cycles(canon)
        edges1 = {frozenset((c1[i], c1[(i + 1) % len(c1)])) for i in range(len(c1))}
        edges2 = {frozenset((c2[i], c2[(i + 1) % len(c2)])) for i in range(len(c2))}
        union_len = len(edges1 ^ edges2)
        achieved: list[tuple[BalanceProfile, SignedGraph]] = []
        for rep in signature_representatives(canon):
            if nullity(rep) != n - k:
                continue
            s1 = cycle_sign(rep, c1)
            s2 = cycle_sign(rep, c2)
            if balanced_only and (s1 != 1 or s2 != 1):
                continue
            profile: BalanceProfile = tuple(
                sorted(((len(c1), s1), (len(c2), s2), (union_len, s1 * s2)))
            )
            achieved.append((profile, rep))
        if achieved:
            entries.append(
                CatalogEntry(
                    code=code,
                    base=base,
                    profiles=tuple(sorted({profile for profile, _ in achieved})),
                    achieving_classes=len(achieved),
                    witness=achieved[0][1],
                )
            )
    return NullityCatalog(
        order=n, k=k, nullity=n - k, balanced_only=balanced_only, entries=tuple(entries)
    )
