"""Hypergraphs, the powerset spine, the Gaifman functor, hypergraph tree-width.

Hyperedges are stored as sorted bitmasks; the empty hyperedge is a legal
edge (the spine contains it) and counts as covered by any decomposition.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Optional

from .chordal import (
    TreeDecomposition,
    treewidth_dp,
    validate_tree_decomposition,
)
from .core import (
    CapExceededError,
    CoconeDiagram,
    DEFAULT_ENUMERATION_CAP,
    InvalidMorphismError,
    Morphism,
    SpanDiagram,
    SpinedError,
    SpinedInstance,
    SpineMismatchError,
)
from .graph import Graph

SPINE_CAP = 16
DIRECT_CAP = 7


@dataclass(frozen=True)
class Hypergraph:
    """Finite vertex set plus a family of hyperedges (vertex-subset bitmasks)."""

    n: int
    edges: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        full = (1 << self.n) - 1
        for e in self.edges:
            if e & ~full:
                raise ValueError("hyperedge out of vertex range")
        if list(self.edges) != sorted(set(self.edges)):
            raise ValueError("hyperedges must be sorted and duplicate-free")

    @property
    def edge_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(
            frozenset(v for v in range(self.n) if e >> v & 1) for e in self.edges
        )


def from_edge_sets(n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    masks = set()
    for e in edges:
        mask = 0
        for v in e:
            if not 0 <= v < n:
                raise ValueError(f"hyperedge vertex {v} out of range for n={n}")
            mask |= 1 << v
        masks.add(mask)
    return Hypergraph(n, tuple(sorted(masks)))


def spine_hypergraph(n: int) -> Hypergraph:
    """([n], all subsets of [n]); capped since there are 2^n hyperedges."""
    if n > SPINE_CAP:
        raise CapExceededError(f"the hypergraph spine is capped at index {SPINE_CAP}")
    return Hypergraph(n, tuple(range(1 << n)))


def gaifman(h: Hypergraph) -> Graph:
    """Same vertices; u ~ v whenever some hyperedge contains both."""
    adj = [0] * h.n
    for e in h.edges:
        m = e
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            adj[v] |= e & ~(1 << v)
    return Graph(h.n, tuple(adj))


def is_hypergraph_homomorphism(m: Morphism) -> bool:
    g, h = m.domain, m.codomain
    if not isinstance(g, Hypergraph) or not isinstance(h, Hypergraph):
        return False
    if len(m.mapping) != g.n or any(not 0 <= x < h.n for x in m.mapping):
        return False
    codomain_edges = set(h.edges)
    for e in g.edges:
        image = 0
        w = e
        while w:
            v = (w & -w).bit_length() - 1
            w &= w - 1
            image |= 1 << m.mapping[v]
        if image not in codomain_edges:
            return False
    return True


def is_hypergraph_monomorphism(m: Morphism) -> bool:
    return len(set(m.mapping)) == len(m.mapping) and is_hypergraph_homomorphism(m)


def enumerate_hypergraph_monomorphisms(
    g: Hypergraph,
    h: Hypergraph,
    cap: int = DEFAULT_ENUMERATION_CAP,
    limit: Optional[int] = None,
) -> list[Morphism]:
    """All injective hypergraph homomorphisms g -> h, lexicographic.

    An edge is checked as soon as its highest vertex is assigned.
    """
    if g.n > cap:
        raise CapExceededError(
            f"domain has {g.n} vertices, beyond the enumeration cap {cap}"
        )
    codomain_edges = set(h.edges)
    if 0 in set(g.edges) and 0 not in codomain_edges:
        return []
    by_top: list[list[int]] = [[] for _ in range(g.n)]
    for e in g.edges:
        if e:
            by_top[e.bit_length() - 1].append(e)
    out: list[Morphism] = []
    assignment = [0] * g.n

    def place(v: int, used: int) -> bool:
        if v == g.n:
            out.append(Morphism(g, h, tuple(assignment), "hypergraph-mono"))
            return limit is not None and len(out) >= limit
        for target in range(h.n):
            if used >> target & 1:
                continue
            assignment[v] = target
            ok = True
            for e in by_top[v]:
                image = 0
                w = e
                while w:
                    u = (w & -w).bit_length() - 1
                    w &= w - 1
                    image |= 1 << assignment[u]
                if image not in codomain_edges:
                    ok = False
                    break
            if ok and place(v + 1, used | (1 << target)):
                return True
        return False

    place(0, 0)
    return out


def gaifman_morphism(m: Morphism) -> Morphism:
    """The Gaifman functor on arrows: the same vertex map between the
    Gaifman graphs, retyped as a graph monomorphism."""
    if not is_hypergraph_monomorphism(m):
        raise InvalidMorphismError("expected an injective hypergraph homomorphism")
    return Morphism(gaifman(m.domain), gaifman(m.codomain), m.mapping, "mono")


def hgr_proxy_pushout(h1: Morphism, h2: Morphism) -> CoconeDiagram:
    """Glue the codomains along the shared powerset spine object.

    The left hypergraph keeps its vertex indices; the right one's
    non-identified vertices follow in their own order.  Hyperedge
    families are merged with duplicates removed.
    """
    spine = h1.domain
    if h2.domain != spine:
        raise SpineMismatchError("proxy-pushout legs must share their apex")
    if spine != spine_hypergraph(spine.n):
        raise SpineMismatchError("the shared object must be a powerset spine object")
    if not (is_hypergraph_monomorphism(h1) and is_hypergraph_monomorphism(h2)):
        raise InvalidMorphismError("proxy-pushout legs must be monomorphisms")
    left: Hypergraph = h1.codomain
    right: Hypergraph = h2.codomain
    right_to_apex = [-1] * right.n
    for i in range(spine.n):
        right_to_apex[h2.mapping[i]] = h1.mapping[i]
    nxt = left.n
    for v in range(right.n):
        if right_to_apex[v] < 0:
            right_to_apex[v] = nxt
            nxt += 1
    masks = set(left.edges)
    for e in right.edges:
        image = 0
        w = e
        while w:
            v = (w & -w).bit_length() - 1
            w &= w - 1
            image |= 1 << right_to_apex[v]
        masks.add(image)
    apex = Hypergraph(nxt, tuple(sorted(masks)))
    inj1 = Morphism(left, apex, tuple(range(left.n)), "hypergraph-mono")
    inj2 = Morphism(right, apex, tuple(right_to_apex), "hypergraph-mono")
    return CoconeDiagram(inj1, inj2)


def hypergraph_treewidth(h: Hypergraph) -> tuple[int, TreeDecomposition]:
    """Exact hypergraph tree-width with a certificate.

    Computed on the Gaifman graph; the certificate is validated against
    the hypergraph itself (every hyperedge inside a bag), which holds
    because each hyperedge induces a Gaifman clique and cliques always
    fit inside a bag.
    """
    res = treewidth_dp(gaifman(h))
    check = validate_tree_decomposition(h, res.decomposition)
    if not check:
        raise SpinedError(
            f"internal error: decomposition invalid for the hypergraph "
            f"({check.problem})"
        )
    return res.width, res.decomposition


def hypergraph_treewidth_direct(h: Hypergraph) -> int:
    """Brute-force minimum width over decompositions built from every
    elimination ordering, independent of :func:`hypergraph_treewidth`.

    Widths are measured along each ordering's fill simulation; every
    ordering achieving the running minimum is turned into an explicit
    decomposition and validated against the hypergraph before the
    minimum is accepted.
    """
    if h.n > DIRECT_CAP:
        raise CapExceededError(f"the direct oracle is capped at {DIRECT_CAP} vertices")
    if h.n == 0:
        return -1
    adj = [0] * h.n
    for e in h.edges:
        m = e
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            adj[v] |= e & ~(1 << v)
    best = h.n
    for order in permutations(range(h.n)):
        cur = list(adj)
        done = 0
        worst = 0
        for v in order:
            done |= 1 << v
            later = cur[v] & ~done
            d = bin(later).count("1")
            if d > worst:
                worst = d
            m = later
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                cur[u] |= later & ~(1 << u)
        if worst < best:
            td = _direct_decomposition(h, order)
            if validate_tree_decomposition(h, td) and td.width == worst:
                best = worst
    return best


def _direct_decomposition(h: Hypergraph, order: tuple[int, ...]) -> TreeDecomposition:
    """Decomposition from one ordering, written out plainly for the oracle."""
    from .graph import from_edges

    adj = [0] * h.n
    for e in h.edges:
        m = e
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            adj[v] |= e & ~(1 << v)
    pos = {v: i for i, v in enumerate(order)}
    done = 0
    bags = []
    tree_edges = []
    roots = []
    for i, v in enumerate(order):
        done |= 1 << v
        later = adj[v] & ~done
        bags.append(tuple(sorted([v] + [u for u in range(h.n) if later >> u & 1])))
        m = later
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            adj[u] |= later & ~(1 << u)
        if later:
            first = min((pos[u] for u in range(h.n) if later >> u & 1))
            tree_edges.append((i, first))
        else:
            roots.append(i)
    tree_edges.extend(zip(roots, roots[1:]))
    return TreeDecomposition(from_edges(len(bags), tree_edges), tuple(bags))


def random_hypergraph(
    rng: random.Random, n: int, max_edges: int = 8
) -> Hypergraph:
    count = rng.randint(0, max_edges)
    masks = {rng.randrange(1 << n) for _ in range(count)} if n else set()
    return Hypergraph(n, tuple(sorted(masks)))


def sample_hgr_span(rng: random.Random, max_part: int = 5) -> SpanDiagram:
    """A seeded monic span out of a powerset spine object."""
    k = rng.randint(0, min(2, max_part))
    spine = spine_hypergraph(k)

    def part() -> tuple[Hypergraph, tuple[int, ...]]:
        size = rng.randint(max(k, 1), max_part)
        anchors = tuple(rng.sample(range(size), k))
        masks = set()
        # every subset of the anchor image must be a hyperedge for the leg
        # to be a hypergraph homomorphism
        for sub in range(1 << k):
            image = 0
            for i in range(k):
                if sub >> i & 1:
                    image |= 1 << anchors[i]
            masks.add(image)
        for _ in range(rng.randint(0, 4)):
            masks.add(rng.randrange(1 << size))
        return Hypergraph(size, tuple(sorted(masks))), anchors

    left_h, left_anchor = part()
    right_h, right_anchor = part()
    return SpanDiagram(
        k,
        Morphism(spine, left_h, left_anchor, "hypergraph-mono"),
        Morphism(spine, right_h, right_anchor, "hypergraph-mono"),
    )


def _hgr_proxy(span: SpanDiagram) -> CoconeDiagram:
    if span.apex != spine_hypergraph(span.index):
        raise SpineMismatchError("span apex must be a powerset spine object")
    return hgr_proxy_pushout(span.left, span.right)


@lru_cache(maxsize=1)
def hgr_instance() -> SpinedInstance:
    """Hypergraphs with injective homomorphisms and the powerset spine."""
    return SpinedInstance(
        name="HGr_mono",
        object_kind="hypergraph",
        spine=spine_hypergraph,
        morphisms=enumerate_hypergraph_monomorphisms,
        is_morphism=is_hypergraph_monomorphism,
        proxy_pushout=_hgr_proxy,
        spine_bound=lambda h: h.n,
        size=lambda h: h.n,
        cap=DEFAULT_ENUMERATION_CAP,
        spine_limit=SPINE_CAP,
        span_sampler=sample_hgr_span,
    )
