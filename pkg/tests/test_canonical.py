"""Canonical codes: isomorphism invariance and separation."""

from __future__ import annotations

import random
from itertools import combinations

from signed_nullity import SignedGraph, build_graph, canonical_code, canonical_form
from oracles import are_isomorphic, cycle_graph, path_graph, star_graph


def random_graph(rng: random.Random, n: int) -> SignedGraph:
    edges = [
        (u, v, rng.choice((1, -1)))
        for u, v in combinations(range(n), 2)
        if rng.random() < 0.45
    ]
    return build_graph(n, edges)


def permuted(g: SignedGraph, perm: list[int]) -> SignedGraph:
    return build_graph(g.order, [(perm[u], perm[v], s) for u, v, s in g.edges])


class TestCanonicalCode:
    def test_invariant_under_relabeling(self):
        rng = random.Random(11)
        for _ in range(120):
            n = rng.randint(1, 7)
            g = random_graph(rng, n)
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_code(g) == canonical_code(permuted(g, perm))

    def test_ignores_signs(self):
        g = build_graph(4, [(0, 1, -1), (1, 2, 1), (2, 3, -1)])
        assert canonical_code(g) == canonical_code(g.underlying())

    def test_separates_non_isomorphic(self):
        pairs = [
            (path_graph(4), star_graph(3)),
            (cycle_graph(5), path_graph(5)),
            (cycle_graph(6), build_graph(6, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (3, 4, 1), (4, 5, 1), (3, 5, 1)])),
        ]
        for g1, g2 in pairs:
            assert canonical_code(g1) != canonical_code(g2)

    def test_agrees_with_isomorphism_oracle_exhaustively(self):
        # every 4-vertex graph: equal codes exactly for isomorphic pairs
        graphs = []
        pairs = list(combinations(range(4), 2))
        for size in range(len(pairs) + 1):
            for chosen in combinations(pairs, size):
                graphs.append(build_graph(4, [(u, v, 1) for u, v in chosen]))
        for g1 in graphs[::3]:
            for g2 in graphs[::4]:
                same_code = canonical_code(g1) == canonical_code(g2)
                assert same_code == are_isomorphic(g1, g2)

    def test_canonical_form_is_a_relabeling(self):
        rng = random.Random(5)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 7))
            code, canon = canonical_form(g)
            assert canon.order == g.order
            assert are_isomorphic(g, canon)
            assert canonical_code(canon) == code
            # idempotent: the canonical graph is its own canonical form
            assert canonical_form(canon)[1] == canon

    def test_empty_graph(self):
        assert canonical_code(build_graph(0, [])) == "0:"
