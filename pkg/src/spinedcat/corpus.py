"""Desk-scale enumeration: graphs up to isomorphism, free trees, closures.

These back the exhaustive checks: one representative per isomorphism
class for every graph on up to 7 vertices, every free tree on up to 8
vertices, and the inductive closure of the complete graphs under clique
sums.  Canonical forms are minimum edge-codes over all vertex
permutations, computed by the batch kernel.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from ._kernels import canonical_codes as _canon_kernel
from .core import CapExceededError, Morphism
from .graph import Graph, clique_sum, complete_graph, from_edges

ISO_ENUMERATION_CAP = 7
CLOSURE_CAP = 6
TREE_CAP = 8


def graph_code(g: Graph) -> int:
    """Upper-triangle adjacency packed into an integer (pair (i,j), i<j, at
    bit i*n - i*(i+1)//2 + (j-i-1))."""
    code = 0
    k = 0
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if g.has_edge(i, j):
                code |= 1 << k
            k += 1
    return code


def graph_from_code(n: int, code: int) -> Graph:
    edges = []
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if code >> k & 1:
                edges.append((i, j))
            k += 1
    return from_edges(n, edges)


@lru_cache(maxsize=None)
def _perm_table(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), np.int64).reshape(-1, max(n, 1))


def canonical_codes_batch(codes: list[int], n: int) -> list[int]:
    if n <= 1:
        return list(codes)
    arr = np.array(codes, np.int64)
    out = np.zeros(len(codes), np.int64)
    _canon_kernel(arr, n, _perm_table(n), out)
    return [int(x) for x in out]


def canonical_code(g: Graph) -> int:
    """Minimum edge-code over all relabelings; equal iff isomorphic."""
    if g.n > 8:
        raise CapExceededError("canonization is capped at 8 vertices")
    return canonical_codes_batch([graph_code(g)], g.n)[0]


@lru_cache(maxsize=None)
def graphs_up_to_iso(max_n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class, for every size <= max_n.

    Built by vertex augmentation: every class on k+1 vertices arises
    from a class on k vertices by attaching one vertex with some
    neighbourhood, so extending all representatives by all
    neighbourhoods and canonizing is exhaustive.
    """
    if max_n > ISO_ENUMERATION_CAP:
        raise CapExceededError(
            f"isomorphism-class enumeration is capped at {ISO_ENUMERATION_CAP}"
        )
    out: list[Graph] = [Graph(0, ())]
    layer_codes = [0]
    for k in range(max_n):
        raw = set()
        for code in layer_codes:
            g = graph_from_code(k, code)
            for nbrs in range(1 << k):
                ext = from_edges(
                    k + 1,
                    list(g.edges) + [(i, k) for i in range(k) if nbrs >> i & 1],
                )
                raw.add(graph_code(ext))
        layer_codes = sorted(set(canonical_codes_batch(sorted(raw), k + 1)))
        out.extend(graph_from_code(k + 1, c) for c in layer_codes)
    return tuple(out)


def _tree_shape(g: Graph) -> str:
    """Canonical string of a free tree: rooted shape at the center(s)."""

    def rooted(root: int, parent: int) -> str:
        subs = sorted(
            rooted(u, root)
            for u in range(g.n)
            if g.has_edge(root, u) and u != parent
        )
        return "(" + "".join(subs) + ")"

    if g.n == 1:
        return "()"
    degree = [g.degree(v) for v in range(g.n)]
    alive = set(range(g.n))
    while len(alive) > 2:
        leaves = [v for v in alive if degree[v] == 1]
        for v in leaves:
            alive.remove(v)
            for u in range(g.n):
                if g.has_edge(v, u) and u in alive:
                    degree[u] -= 1
    centers = sorted(alive)
    return min(rooted(c, -1) for c in centers)


@lru_cache(maxsize=None)
def free_trees(n: int) -> tuple[Graph, ...]:
    """All trees on exactly n vertices, one per isomorphism class.

    Grown by leaf attachment and deduplicated via the rooted canonical
    shape, which is cheap enough to stay exact up to the cap.
    """
    if n > TREE_CAP:
        raise CapExceededError(f"free-tree enumeration is capped at {TREE_CAP}")
    if n == 0:
        return ()
    if n == 1:
        return (Graph(1, (0,)),)
    out: dict[str, Graph] = {}
    for smaller in free_trees(n - 1):
        for attach in range(smaller.n):
            t = from_edges(n, list(smaller.edges) + [(attach, n - 1)])
            out.setdefault(_tree_shape(t), t)
    return tuple(out[k] for k in sorted(out))


def _clique_sets(g: Graph, k: int) -> list[tuple[int, ...]]:
    if k == 0:
        return [()]
    return [
        c
        for c in combinations(range(g.n), k)
        if all(g.has_edge(u, v) for u, v in combinations(c, 2))
    ]


@lru_cache(maxsize=None)
def clique_sum_closure(max_n: int) -> frozenset[tuple[int, int]]:
    """Canonical keys (n, code) of every graph on <= max_n vertices reachable
    from the complete graphs by iterated clique sums.

    Computed as an exhaustive worklist fixpoint: every pair of reached
    classes is glued along every shared clique embedding, deduplicating
    by canonical code.
    """
    if max_n > CLOSURE_CAP:
        raise CapExceededError(f"closure computation is capped at {CLOSURE_CAP}")
    reps: dict[tuple[int, int], Graph] = {}
    queue: list[Graph] = []
    for k in range(max_n + 1):
        g = complete_graph(k)
        key = (k, canonical_code(g))
        reps[key] = g
        queue.append(g)
    seen_labeled: set[tuple[int, int]] = set()
    while queue:
        a = queue.pop()
        partners = list(reps.values())
        for b in partners:
            for k in range(min(a.n, b.n) + 1):
                if a.n + b.n - k > max_n:
                    continue
                spine = complete_graph(k)
                for set_a in _clique_sets(a, k):
                    for set_b_perm in permutations(range(b.n), k):
                        if not all(
                            b.has_edge(u, v)
                            for u, v in combinations(set_b_perm, 2)
                        ):
                            continue
                        apex = clique_sum(
                            Morphism(spine, a, set_a, "mono"),
                            Morphism(spine, b, set_b_perm, "mono"),
                        ).apex
                        labeled = (apex.n, graph_code(apex))
                        if labeled in seen_labeled:
                            continue
                        seen_labeled.add(labeled)
                        key = (apex.n, canonical_code(apex))
                        if key not in reps:
                            reps[key] = apex
                            queue.append(apex)
    return frozenset(reps)
