"""The reflexive-monomorphism category on graphs and complemented tree-width.

Arrows reflect edges (adjacency of images implies adjacency of
preimages); the spine consists of the discrete graphs, and the proxy
pushout glues along the shared independent set and then joins the two
remainders completely.  Complementation is an isomorphism onto the
graph category with injective homomorphisms, which is how the
complemented tree-width tw(complement) + 1 is computed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .chordal import is_chordal, treewidth_dp
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
from .graph import (
    Graph,
    MAX_VERTICES,
    clique_number,
    complement,
    discrete_graph,
    from_edges,
    is_monomorphism,
    random_graph,
)


def is_reflexive_homomorphism(m: Morphism) -> bool:
    """f(x)f(y) an edge of the codomain forces xy an edge of the domain."""
    g, h = m.domain, m.codomain
    if not isinstance(g, Graph) or not isinstance(h, Graph):
        return False
    if len(m.mapping) != g.n or any(not 0 <= x < h.n for x in m.mapping):
        return False
    for x in range(g.n):
        for y in range(x + 1, g.n):
            fx, fy = m.mapping[x], m.mapping[y]
            if fx != fy and h.has_edge(fx, fy) and not g.has_edge(x, y):
                return False
    return True


def is_reflexive_monomorphism(m: Morphism) -> bool:
    return len(set(m.mapping)) == len(m.mapping) and is_reflexive_homomorphism(m)


def enumerate_reflexive_monomorphisms(
    g: Graph,
    h: Graph,
    cap: int = DEFAULT_ENUMERATION_CAP,
    limit: Optional[int] = None,
) -> list[Morphism]:
    """All injective reflexive homomorphisms g -> h, lexicographic."""
    if g.n > cap:
        raise CapExceededError(
            f"domain has {g.n} vertices, beyond the enumeration cap {cap}"
        )
    out: list[Morphism] = []
    assignment = [0] * g.n

    def place(v: int, used: int) -> bool:
        if v == g.n:
            out.append(Morphism(g, h, tuple(assignment), "reflexive-mono"))
            return limit is not None and len(out) >= limit
        for target in range(h.n):
            if used >> target & 1:
                continue
            ok = True
            for u in range(v):
                if h.has_edge(assignment[u], target) and not g.has_edge(u, v):
                    ok = False
                    break
            if ok:
                assignment[v] = target
                if place(v + 1, used | (1 << target)):
                    return True
        return False

    place(0, 0)
    return out


@dataclass(frozen=True)
class IndependentGluing:
    """Result of gluing along a shared independent set with a complete join
    between the two remainders."""

    left: Graph
    right: Graph
    shared: int
    apex: Graph
    leg_left: Morphism
    leg_right: Morphism

    @property
    def cocone(self) -> CoconeDiagram:
        return CoconeDiagram(self.leg_left, self.leg_right)


def independent_gluing(l: Morphism, r: Morphism) -> IndependentGluing:
    """Glue the codomains along the shared discrete graph, then make every
    left-remainder vertex adjacent to every right-remainder vertex.

    The left graph keeps its indices; the right graph's non-identified
    vertices follow in their own order (mirroring the clique-sum layout,
    so complementation carries one construction to the other on the
    nose).
    """
    spine = l.domain
    if r.domain != spine:
        raise SpineMismatchError("gluing legs must share their apex")
    if not isinstance(spine, Graph) or spine != discrete_graph(spine.n):
        raise SpineMismatchError("the shared object must be a discrete graph")
    if not (is_reflexive_monomorphism(l) and is_reflexive_monomorphism(r)):
        raise InvalidMorphismError("gluing legs must be reflexive monomorphisms")
    left: Graph = l.codomain
    right: Graph = r.codomain
    right_to_apex = [-1] * right.n
    for i in range(spine.n):
        right_to_apex[r.mapping[i]] = l.mapping[i]
    nxt = left.n
    for v in range(right.n):
        if right_to_apex[v] < 0:
            right_to_apex[v] = nxt
            nxt += 1
    shared_left = set(l.mapping)
    left_rest = [v for v in range(left.n) if v not in shared_left]
    right_rest = [right_to_apex[v] for v in range(right.n) if v not in set(r.mapping)]
    edges = list(left.edges)
    edges.extend((right_to_apex[u], right_to_apex[v]) for u, v in right.edges)
    edges.extend((u, v) for u in left_rest for v in right_rest)
    apex = from_edges(nxt, edges)
    leg_left = Morphism(left, apex, tuple(range(left.n)), "reflexive-mono")
    leg_right = Morphism(right, apex, tuple(right_to_apex), "reflexive-mono")
    if not (
        is_reflexive_monomorphism(leg_left) and is_reflexive_monomorphism(leg_right)
    ):
        raise InvalidMorphismError("internal error: gluing legs are not reflexive")
    return IndependentGluing(
        left, right, spine.n, apex, leg_left, leg_right
    )


def complement_functor_check(m: Morphism) -> Morphism:
    """Retype a reflexive monomorphism as an injective homomorphism between
    the complements, validating both sides of the isomorphism."""
    if not is_reflexive_monomorphism(m):
        raise InvalidMorphismError("expected an injective reflexive homomorphism")
    out = Morphism(complement(m.domain), complement(m.codomain), m.mapping, "mono")
    if not is_monomorphism(out):
        raise InvalidMorphismError(
            "internal error: complementation did not yield a graph monomorphism"
        )
    return out


def independence_number(g: Graph) -> int:
    """Largest independent set, by brute clique search on the complement."""
    return clique_number(complement(g))


def complemented_treewidth(g: Graph) -> int:
    """tw(complement of g) + 1: the triangulation value of this category."""
    return treewidth_dp(complement(g)).width + 1


def is_cochordal(g: Graph) -> bool:
    """Generated from discrete graphs by independent gluings, i.e. the
    complement is chordal (complementation carries generators to generators)."""
    return is_chordal(complement(g)).chordal


def complemented_treewidth_native(g: Graph, cap: int = 5) -> int:
    """Cross-check oracle: the minimum independence number over the
    edge-subgraphs of ``g`` that are generated by independent gluings.

    Identity-map completions in this category delete edges, so the
    search ranges over all edge subsets (hence the small cap).
    """
    if g.n > cap:
        raise CapExceededError(f"the native completion search is capped at {cap}")
    edges = list(g.edges)
    best = None
    for keep in range(1 << len(edges)):
        h = from_edges(g.n, [e for i, e in enumerate(edges) if keep >> i & 1])
        if is_cochordal(h):
            val = independence_number(h)
            if best is None or val < best:
                best = val
    if best is None:
        raise CapExceededError("no gluing-generated completion found")
    return best


def sample_independent_span(rng: random.Random, max_part: int = 6) -> SpanDiagram:
    """A seeded span of reflexive monomorphisms out of a discrete graph."""
    k = rng.randint(0, min(3, max_part))
    spine = discrete_graph(k)

    def part() -> tuple[Graph, tuple[int, ...]]:
        size = rng.randint(max(k, 1), max_part)
        g = random_graph(rng, size, rng.choice([0.2, 0.4, 0.6]))
        anchors = tuple(rng.sample(range(size), k))
        adj = list(g.adj)
        for u in anchors:
            for v in anchors:
                if u != v:
                    adj[u] &= ~(1 << v)
        return Graph(size, tuple(adj)), anchors

    left_g, left_anchor = part()
    right_g, right_anchor = part()
    return SpanDiagram(
        k,
        Morphism(spine, left_g, left_anchor, "reflexive-mono"),
        Morphism(spine, right_g, right_anchor, "reflexive-mono"),
    )


def _rmono_proxy(span: SpanDiagram) -> CoconeDiagram:
    if span.apex != discrete_graph(span.index):
        raise SpineMismatchError("span apex must be a discrete graph")
    return independent_gluing(span.left, span.right).cocone


@lru_cache(maxsize=1)
def rmono_instance() -> SpinedInstance:
    """Graphs with injective reflexive homomorphisms and the discrete spine."""
    return SpinedInstance(
        name="R_mono",
        object_kind="graph",
        spine=discrete_graph,
        morphisms=enumerate_reflexive_monomorphisms,
        is_morphism=is_reflexive_monomorphism,
        proxy_pushout=_rmono_proxy,
        spine_bound=lambda g: g.n,
        size=lambda g: g.n,
        cap=DEFAULT_ENUMERATION_CAP,
        spine_limit=MAX_VERTICES,
        span_sampler=sample_independent_span,
    )
