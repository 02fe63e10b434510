"""Finite simple graphs, homomorphism machinery, clique sums, GRPH_mono.

Graphs live on vertex set {0..n-1} and are stored as one adjacency
bitset per vertex (hard cap 64 vertices).  Equality is equality of the
canonical encoding, not isomorphism; isomorphism is a separate,
test-scale operation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

from .core import (
    CapExceededError,
    CoconeDiagram,
    DEFAULT_ENUMERATION_CAP,
    InvalidMorphismError,
    Morphism,
    SpanDiagram,
    SpinedInstance,
    SpineMismatchError,
)

MAX_VERTICES = 64


@dataclass(frozen=True)
class Graph:
    """A loopless simple graph: vertex count plus per-vertex adjacency bitsets."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if self.n > MAX_VERTICES:
            raise CapExceededError(f"graphs are capped at {MAX_VERTICES} vertices")
        if len(self.adj) != self.n:
            raise ValueError("adjacency table length must equal the vertex count")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if mask >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in range(v):
                if (self.adj[v] >> u & 1) != (self.adj[u] >> v & 1):
                    raise ValueError("adjacency table is not symmetric")

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if self.adj[u] >> v & 1
        )

    @property
    def edge_count(self) -> int:
        return sum(bin(m).count("1") for m in self.adj) // 2

    @property
    def edge_sets(self) -> tuple[frozenset[int], ...]:
        """Edges as vertex sets; the shape the decomposition validator consumes."""
        return tuple(frozenset(e) for e in self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def discrete_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def apex_extension(g: Graph) -> Graph:
    """Adjoin one new vertex adjacent to every existing vertex."""
    full = (1 << g.n) - 1
    return Graph(g.n + 1, tuple(m | (1 << g.n) for m in g.adj) + (full,))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.adj)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on the given vertices, relabelled in their sorted order."""
    verts = sorted(set(vertices))
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v])
        for u, v in combinations(verts, 2)
        if g.has_edge(u, v)
    ]
    return from_edges(len(verts), edges)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    work = g.adj[0]
    while work:
        v = (work & -work).bit_length() - 1
        work &= work - 1
        if seen >> v & 1:
            continue
        seen |= 1 << v
        work |= g.adj[v] & ~seen
    return seen == (1 << g.n) - 1


def is_tree(g: Graph) -> bool:
    return g.n > 0 and g.edge_count == g.n - 1 and is_connected(g)


def is_homomorphism(m: Morphism) -> bool:
    """Edge-preserving vertex map between graphs (any kind tag accepted)."""
    g, h = m.domain, m.codomain
    if not isinstance(g, Graph) or not isinstance(h, Graph):
        return False
    if len(m.mapping) != g.n or any(not 0 <= x < h.n for x in m.mapping):
        return False
    return all(h.has_edge(m.mapping[u], m.mapping[v]) for u, v in g.edges)


def is_monomorphism(m: Morphism) -> bool:
    return is_homomorphism(m) and len(set(m.mapping)) == len(m.mapping)


def enumerate_monomorphisms(
    g: Graph,
    h: Graph,
    cap: int = DEFAULT_ENUMERATION_CAP,
    limit: Optional[int] = None,
) -> list[Morphism]:
    """All injective homomorphisms g -> h, lexicographic by assignment vector."""
    if g.n > cap:
        raise CapExceededError(
            f"domain has {g.n} vertices, beyond the enumeration cap {cap}"
        )
    out: list[Morphism] = []
    assignment = [0] * g.n

    def place(v: int, used: int) -> bool:
        if v == g.n:
            out.append(Morphism(g, h, tuple(assignment), "mono"))
            return limit is not None and len(out) >= limit
        earlier = g.adj[v] & ((1 << v) - 1)
        for target in range(h.n):
            if used >> target & 1:
                continue
            ok = True
            e = earlier
            while e:
                u = (e & -e).bit_length() - 1
                e &= e - 1
                if not h.adj[assignment[u]] >> target & 1:
                    ok = False
                    break
            if ok:
                assignment[v] = target
                if place(v + 1, used | (1 << target)):
                    return True
        return False

    place(0, 0)
    return out


def enumerate_homomorphisms(
    g: Graph,
    h: Graph,
    cap: int = DEFAULT_ENUMERATION_CAP,
    limit: Optional[int] = None,
) -> list[Morphism]:
    """All (not necessarily injective) homomorphisms g -> h."""
    if g.n > cap:
        raise CapExceededError(
            f"domain has {g.n} vertices, beyond the enumeration cap {cap}"
        )
    out: list[Morphism] = []
    assignment = [0] * g.n

    def place(v: int) -> bool:
        if v == g.n:
            out.append(Morphism(g, h, tuple(assignment), "graph-homo"))
            return limit is not None and len(out) >= limit
        earlier = g.adj[v] & ((1 << v) - 1)
        for target in range(h.n):
            ok = True
            e = earlier
            while e:
                u = (e & -e).bit_length() - 1
                e &= e - 1
                if not h.adj[assignment[u]] >> target & 1:
                    ok = False
                    break
            if ok:
                assignment[v] = target
                if place(v + 1):
                    return True
        return False

    place(0)
    return out


def clique_number(g: Graph) -> int:
    """Largest clique size, by branch-and-bound over candidate bitsets."""
    best = 0

    def grow(size: int, candidates: int) -> None:
        nonlocal best
        if size > best:
            best = size
        work = candidates
        while work:
            v = (work & -work).bit_length() - 1
            work &= work - 1
            remaining = bin(candidates).count("1")
            if size + remaining <= best:
                return
            candidates &= ~(1 << v)
            grow(size + 1, candidates & g.adj[v])

    grow(0, (1 << g.n) - 1)
    return best


def clique_sum(g1: Morphism, g2: Morphism) -> CoconeDiagram:
    """Glue the two codomains along the shared complete graph.

    The first graph keeps its vertex indices (its leg is the identity);
    the second graph's non-identified vertices follow in their own
    order.
    """
    k = g1.domain
    if g2.domain != k:
        raise SpineMismatchError("clique-sum legs must share their apex")
    if not isinstance(k, Graph) or k != complete_graph(k.n):
        raise SpineMismatchError("the shared object must be a complete graph")
    if not (is_monomorphism(g1) and is_monomorphism(g2)):
        raise InvalidMorphismError("clique-sum legs must be monomorphisms")
    left: Graph = g1.codomain
    right: Graph = g2.codomain
    right_to_apex = [-1] * right.n
    for i in range(k.n):
        right_to_apex[g2.mapping[i]] = g1.mapping[i]
    nxt = left.n
    for v in range(right.n):
        if right_to_apex[v] < 0:
            right_to_apex[v] = nxt
            nxt += 1
    edges = list(left.edges)
    edges.extend(
        (right_to_apex[u], right_to_apex[v]) for u, v in right.edges
    )
    apex = from_edges(nxt, edges)
    inj1 = Morphism(left, apex, tuple(range(left.n)), "mono")
    inj2 = Morphism(right, apex, tuple(right_to_apex), "mono")
    return CoconeDiagram(inj1, inj2)


def is_isomorphic(g: Graph, h: Graph, cap: int = 10) -> bool:
    """Exhaustive isomorphism test with degree-sequence pruning (test scale)."""
    if g.n != h.n:
        return False
    if g.n > cap:
        raise CapExceededError(f"isomorphism search is capped at {cap} vertices")
    if sorted(g.degree(v) for v in range(g.n)) != sorted(
        h.degree(v) for v in range(h.n)
    ):
        return False
    assignment = [0] * g.n

    def place(v: int, used: int) -> bool:
        if v == g.n:
            return True
        for target in range(h.n):
            if used >> target & 1:
                continue
            if g.degree(v) != h.degree(target):
                continue
            if all(
                (g.adj[v] >> u & 1) == (h.adj[target] >> assignment[u] & 1)
                for u in range(v)
            ):
                assignment[v] = target
                if place(v + 1, used | (1 << target)):
                    return True
        return False

    return place(0, 0)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


def sample_clique_span(rng: random.Random, max_part: int = 6) -> SpanDiagram:
    """A seeded monic span out of a complete graph, parts up to ``max_part``."""
    k = rng.randint(0, min(3, max_part))

    def part() -> tuple[Graph, tuple[int, ...]]:
        size = rng.randint(max(k, 1), max_part) if max_part >= 1 else 0
        g = random_graph(rng, size, rng.choice([0.2, 0.4, 0.6]))
        anchors = tuple(rng.sample(range(size), k))
        adj = list(g.adj)
        for u in anchors:
            for v in anchors:
                if u != v:
                    adj[u] |= 1 << v
        return Graph(size, tuple(adj)), anchors

    spine = complete_graph(k)
    left_g, left_anchor = part()
    right_g, right_anchor = part()
    return SpanDiagram(
        k,
        Morphism(spine, left_g, left_anchor, "mono"),
        Morphism(spine, right_g, right_anchor, "mono"),
    )


def _grph_proxy(span: SpanDiagram) -> CoconeDiagram:
    expected = complete_graph(span.index)
    if span.apex != expected:
        raise SpineMismatchError("span apex must be the complete graph K_n")
    return clique_sum(span.left, span.right)


@lru_cache(maxsize=1)
def grph_mono_instance() -> SpinedInstance:
    """Graphs with injective homomorphisms, spine K_n, clique sums as proxy pushouts."""
    return SpinedInstance(
        name="GRPH_mono",
        object_kind="graph",
        spine=complete_graph,
        morphisms=enumerate_monomorphisms,
        is_morphism=is_monomorphism,
        proxy_pushout=_grph_proxy,
        spine_bound=lambda g: g.n,
        size=lambda g: g.n,
        cap=DEFAULT_ENUMERATION_CAP,
        spine_limit=MAX_VERTICES,
        span_sampler=sample_clique_span,
    )
