"""Vertex labelings, quotient graphs, and label-induced width measures.

A labeling of a graph picks a class for every vertex; its quotient graph
has the classes as vertices and keeps an edge between two distinct
classes whenever some base edge joins them.  Restricting the admissible
labelings (all classes modules / all classes independent) gives the
modular and chromatic tree-width of the base graph.

The induced category has the labelings themselves as objects, with the
hom-sets borrowed from the quotients; its spine is the identity labeling
of each complete graph and its proxy pushout is the identity labeling of
the base clique sum.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from .chordal import treewidth_dp
from .core import (
    CapExceededError,
    CoconeDiagram,
    Morphism,
    SpanDiagram,
    SpinedError,
    SpinedInstance,
    SpineMismatchError,
)
from .graph import Graph, complete_graph, from_edges

PARTITION_CAP = 10


class SpineSurjectionError(SpinedError):
    """The projection misses a spine object or a distinguished preimage."""


@dataclass(frozen=True)
class Labeling:
    """A total vertex labeling with contiguous label range 0..k-1."""

    base: Graph
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.base.n:
            raise ValueError("one label per vertex required")
        k = self.class_count
        if set(self.labels) != set(range(k)):
            raise ValueError("labels must be contiguous from 0")

    @property
    def class_count(self) -> int:
        return max(self.labels, default=-1) + 1

    def class_members(self, label: int) -> tuple[int, ...]:
        return tuple(v for v, l in enumerate(self.labels) if l == label)


def identity_labeling(g: Graph) -> Labeling:
    return Labeling(g, tuple(range(g.n)))


def quotient_graph(lab: Labeling) -> Graph:
    """Classes as vertices; an edge between distinct classes joined by some
    base edge (loops discarded)."""
    k = lab.class_count
    edges = set()
    for u, v in lab.base.edges:
        lu, lv = lab.labels[u], lab.labels[v]
        if lu != lv:
            edges.add((min(lu, lv), max(lu, lv)))
    return from_edges(k, edges)


def is_module(g: Graph, vertices: Iterable[int]) -> bool:
    """Every outside vertex sees all of the set or none of it."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    for z in range(g.n):
        if mask >> z & 1:
            continue
        hit = g.adj[z] & mask
        if hit != 0 and hit != mask:
            return False
    return True


def is_modular_labeling(lab: Labeling) -> bool:
    return all(
        is_module(lab.base, lab.class_members(i)) for i in range(lab.class_count)
    )


def is_proper_coloring(lab: Labeling) -> bool:
    return all(lab.labels[u] != lab.labels[v] for u, v in lab.base.edges)


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All set partitions of range(n) as restricted-growth label strings."""
    if n == 0:
        yield ()
        return
    labels = [0] * n

    def extend(i: int, top: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(labels)
            return
        for c in range(top + 2):
            labels[i] = c
            yield from extend(i + 1, max(top, c))

    yield from extend(1, 0)


@dataclass(frozen=True)
class LabelWidthResult:
    """An induced width value plus the labeling achieving it."""

    value: int
    witness: Labeling


@dataclass(frozen=True)
class ModularWidthResult:
    """Modular tree-width, with the one-class labeling reported separately.

    The whole vertex set is itself a module, so the quotient by the
    one-class labeling is a single vertex and its width is trivially 0;
    the headline ``value`` therefore ranges over modular labelings with
    at least two classes (graphs with fewer than two vertices fall back
    to the identity labeling).  ``one_class_value`` is the width under
    the trivial labeling, kept visible rather than mixed in.
    """

    value: int
    witness: Labeling
    one_class_value: int
    one_class_witness: Labeling


def modular_treewidth(g: Graph) -> ModularWidthResult:
    """Minimum tree-width over modular quotients (partition enumeration)."""
    if g.n > PARTITION_CAP:
        raise CapExceededError(
            f"partition enumeration is capped at {PARTITION_CAP} vertices"
        )
    if g.n <= 1:
        lab = identity_labeling(g)
        w = treewidth_dp(quotient_graph(lab)).width
        return ModularWidthResult(w, lab, w, lab)
    one_class = Labeling(g, (0,) * g.n)
    one_class_value = treewidth_dp(quotient_graph(one_class)).width
    best: Optional[ModularWidthResult] = None
    for labels in set_partitions(g.n):
        if max(labels) == 0:
            continue
        lab = Labeling(g, labels)
        if not is_modular_labeling(lab):
            continue
        w = treewidth_dp(quotient_graph(lab)).width
        if best is None or w < best.value:
            best = ModularWidthResult(w, lab, one_class_value, one_class)
    if best is None:
        raise SpinedError("internal error: the singleton labeling is always modular")
    return best


def chromatic_treewidth(g: Graph) -> LabelWidthResult:
    """Minimum tree-width over quotients by proper colorings."""
    if g.n > PARTITION_CAP:
        raise CapExceededError(
            f"partition enumeration is capped at {PARTITION_CAP} vertices"
        )
    best: Optional[LabelWidthResult] = None
    for labels in set_partitions(g.n):
        lab = Labeling(g, labels)
        if not is_proper_coloring(lab):
            continue
        w = treewidth_dp(quotient_graph(lab)).width
        if best is None or w < best.value:
            best = LabelWidthResult(w, lab)
    if best is None:
        raise SpinedError("internal error: the identity labeling is always proper")
    return best


def chromatic_number(g: Graph) -> int:
    """Brute-force chromatic number (independent oracle for the tests)."""
    if g.n == 0:
        return 0

    def colorable(k: int) -> bool:
        colors = [0] * g.n

        def place(v: int) -> bool:
            if v == g.n:
                return True
            for c in range(min(k, v + 1)):
                if all(
                    not g.has_edge(u, v) or colors[u] != c for u in range(v)
                ):
                    colors[v] = c
                    if place(v + 1):
                        return True
            return False

        return place(0)

    k = 1
    while not colorable(k):
        k += 1
    return k


def triangulation_labeling(lab: Labeling) -> int:
    """The induced triangulation value: tw of the quotient, plus one."""
    return treewidth_dp(quotient_graph(lab)).width + 1


def _blowup_labeling(rng: random.Random, g: Graph) -> Labeling:
    """A random labeling whose quotient is exactly ``g`` (classes of size 1-2,
    at least one cross edge per quotient edge, inner edges free)."""
    sizes = [rng.randint(1, 2) for _ in range(g.n)]
    starts = []
    total = 0
    for s in sizes:
        starts.append(total)
        total += s
    labels = []
    for cls, s in enumerate(sizes):
        labels.extend([cls] * s)
    edges = []
    for u, v in g.edges:
        choices = [
            (starts[u] + i, starts[v] + j)
            for i in range(sizes[u])
            for j in range(sizes[v])
        ]
        picked = [c for c in choices if rng.random() < 0.5]
        if not picked:
            picked = [rng.choice(choices)]
        edges.extend(picked)
    for cls in range(g.n):
        if sizes[cls] == 2 and rng.random() < 0.5:
            edges.append((starts[cls], starts[cls] + 1))
    return Labeling(from_edges(total, edges), tuple(labels))


def sample_labeling_span(rng: random.Random, max_part: int = 5) -> SpanDiagram:
    """A seeded span in the label category: blow up a base clique span."""
    from .graph import sample_clique_span

    base = sample_clique_span(rng, max_part)
    left = _blowup_labeling(rng, base.left.codomain)
    right = _blowup_labeling(rng, base.right.codomain)
    spine_lab = identity_labeling(complete_graph(base.index))
    return SpanDiagram(
        base.index,
        Morphism(spine_lab, left, base.left.mapping, base.left.kind),
        Morphism(spine_lab, right, base.right.mapping, base.right.kind),
    )


def induced_instance(
    base: Optional[SpinedInstance] = None,
    project: Callable[[Labeling], Graph] = quotient_graph,
    spine_preimage: Optional[Callable[[int], Labeling]] = None,
    pushout_preimage: Optional[Callable[[Graph], Labeling]] = None,
    name: str = "labelings",
) -> SpinedInstance:
    """The category of labelings induced by projecting onto a base category.

    Hom-sets are borrowed from the projections; the spine is the chosen
    preimage of each base spine object and the proxy pushout is the
    chosen preimage of the base proxy pushout.  Raises
    :class:`SpineSurjectionError` when a chosen preimage fails to
    project onto the required object.
    """
    from .graph import grph_mono_instance

    if base is None:
        base = grph_mono_instance()
    if spine_preimage is None:
        def spine_preimage(n: int) -> Labeling:
            return identity_labeling(base.spine(n))
    if pushout_preimage is None:
        pushout_preimage = identity_labeling

    def spine(n: int) -> Labeling:
        lab = spine_preimage(n)
        if project(lab) != base.spine(n):
            raise SpineSurjectionError(
                f"spine preimage at index {n} does not project onto the spine"
            )
        return lab

    def morphisms(x: Labeling, y: Labeling, limit=None) -> list[Morphism]:
        found = base.morphisms(project(x), project(y), limit=limit)
        return [Morphism(x, y, m.mapping, m.kind) for m in found]

    def is_morphism(m: Morphism) -> bool:
        if not isinstance(m.domain, Labeling) or not isinstance(m.codomain, Labeling):
            return False
        return base.is_morphism(
            Morphism(project(m.domain), project(m.codomain), m.mapping, m.kind)
        )

    def proxy(span: SpanDiagram) -> CoconeDiagram:
        if project(span.apex) != base.spine(span.index):
            raise SpineMismatchError("span apex must project onto a spine object")
        base_span = SpanDiagram(
            span.index,
            Morphism(
                project(span.apex),
                project(span.left.codomain),
                span.left.mapping,
                span.left.kind,
            ),
            Morphism(
                project(span.apex),
                project(span.right.codomain),
                span.right.mapping,
                span.right.kind,
            ),
        )
        base_cocone = base.proxy_pushout(base_span)
        apex_lab = pushout_preimage(base_cocone.apex)
        if project(apex_lab) != base_cocone.apex:
            raise SpineSurjectionError(
                "distinguished preimage does not project onto the proxy pushout"
            )
        return CoconeDiagram(
            Morphism(
                span.left.codomain,
                apex_lab,
                base_cocone.left.mapping,
                base_cocone.left.kind,
            ),
            Morphism(
                span.right.codomain,
                apex_lab,
                base_cocone.right.mapping,
                base_cocone.right.kind,
            ),
        )

    return SpinedInstance(
        name=name,
        object_kind="labeling",
        spine=spine,
        morphisms=morphisms,
        is_morphism=is_morphism,
        proxy_pushout=proxy,
        spine_bound=lambda lab: base.spine_bound(project(lab)),
        size=lambda lab: base.size(project(lab)) if base.size else 0,
        cap=base.cap,
        spine_limit=base.spine_limit,
        span_sampler=sample_labeling_span,
    )
