"""Tree decompositions, chordality, exact tree-width, chordal completions.

The exact solver is a Held-Karp style dynamic program over elimination
prefixes (subsets of the vertex set); an independent brute-force oracle
enumerates elimination orderings outright.  Both run on the kernels in
``_kernels`` and share no code.  All widths are certified: every
decomposition handed out validates against the two tree-decomposition
conditions (every edge inside a bag; connected occurrence subtrees).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from ._kernels import treewidth_dp as _dp_kernel
from ._kernels import treewidth_oracle as _oracle_kernel
from .core import CapExceededError, Morphism, SpinedError
from .graph import Graph, clique_number, from_edges, is_connected

TREEWIDTH_CAP = 24
ORACLE_CAP = 9
COMPLETION_CAP = 16


class NotChordalError(SpinedError):
    pass


@dataclass(frozen=True)
class TreeDecomposition:
    """A tree with one bag of object vertices per tree node."""

    tree: Graph
    bags: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.bags) != self.tree.n:
            raise ValueError("one bag per tree node required")

    @property
    def width(self) -> int:
        """Max bag size minus one; -1 for the empty decomposition."""
        return max((len(b) for b in self.bags), default=0) - 1


EMPTY_DECOMPOSITION = TreeDecomposition(Graph(0, ()), ())


@dataclass(frozen=True)
class DecompositionCheck:
    ok: bool
    problem: Optional[str] = None
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


def validate_tree_decomposition(obj: Any, td: TreeDecomposition) -> DecompositionCheck:
    """Check the two decomposition conditions against ``obj``.

    ``obj`` is anything exposing ``n`` (vertex count) and ``edge_sets``
    (each edge as a vertex set); graphs and hypergraphs both qualify.
    The empty edge is treated as covered by definition.  Reports the
    first violated condition together with a witness.
    """
    for bag in td.bags:
        for v in bag:
            if not 0 <= v < obj.n:
                return DecompositionCheck(False, "bag-vertex-out-of-range", (bag, v))
    t = td.tree
    if t.n > 0 and not (t.edge_count == t.n - 1 and is_connected(t)):
        return DecompositionCheck(False, "tree-not-a-tree", t)
    bag_masks = [sum(1 << v for v in bag) for bag in td.bags]
    for edge in obj.edge_sets:
        if not edge:
            continue
        mask = sum(1 << v for v in edge)
        if not any(mask & ~b == 0 for b in bag_masks):
            return DecompositionCheck(False, "edge-not-covered", edge)
    for x in range(obj.n):
        nodes = [t_ for t_, b in enumerate(bag_masks) if b >> x & 1]
        if not nodes:
            return DecompositionCheck(False, "vertex-not-covered", x)
        node_set = set(nodes)
        seen = {nodes[0]}
        stack = [nodes[0]]
        while stack:
            cur = stack.pop()
            for nb in range(t.n):
                if t.has_edge(cur, nb) and nb in node_set and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        if seen != node_set:
            return DecompositionCheck(False, "occurrence-set-disconnected", x)
    return DecompositionCheck(True)


@dataclass(frozen=True)
class ChordalityResult:
    chordal: bool
    elimination: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.chordal


def is_chordal(g: Graph) -> ChordalityResult:
    """Maximum-cardinality search plus a simpliciality check.

    Returns the perfect elimination ordering when one exists (the
    reverse of the MCS visit order, ties broken toward smaller vertex
    indices, so results are reproducible).
    """
    n = g.n
    weights = [0] * n
    visited = 0
    visit_order = []
    for _ in range(n):
        best, best_w = -1, -1
        for v in range(n):
            if not visited >> v & 1 and weights[v] > best_w:
                best, best_w = v, weights[v]
        visited |= 1 << best
        visit_order.append(best)
        m = g.adj[best] & ~visited
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            weights[u] += 1
    peo = tuple(reversed(visit_order))
    pos = {v: i for i, v in enumerate(peo)}
    for i, v in enumerate(peo):
        later = 0
        m = g.adj[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if pos[u] > i:
                later |= 1 << u
        m = later
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if (g.adj[u] & later & ~(1 << u)) != later & ~(1 << u):
                return ChordalityResult(False)
    return ChordalityResult(True, peo)


def fill_in(g: Graph, order: tuple[int, ...]) -> Graph:
    """Chordal supergraph from eliminating along ``order``."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("elimination order must be a permutation of the vertices")
    adj = list(g.adj)
    eliminated = 0
    for v in order:
        eliminated |= 1 << v
        later = adj[v] & ~eliminated
        m = later
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            adj[u] |= later & ~(1 << u)
    return Graph(g.n, tuple(adj))


def decomposition_from_ordering(g: Graph, order: tuple[int, ...]) -> TreeDecomposition:
    """Bags {v} + later fill-neighbours of v, joined at each vertex's first
    later neighbour; roots of distinct components are chained."""
    if g.n == 0:
        return EMPTY_DECOMPOSITION
    filled = fill_in(g, order)
    pos = {v: i for i, v in enumerate(order)}
    bags = []
    edges = []
    roots = []
    for i, v in enumerate(order):
        later = [u for u in range(g.n) if filled.has_edge(v, u) and pos[u] > i]
        bags.append(tuple(sorted([v] + later)))
        if later:
            edges.append((i, pos[min(later, key=lambda u: pos[u])]))
        else:
            roots.append(i)
    edges.extend(zip(roots, roots[1:]))
    return TreeDecomposition(from_edges(len(bags), edges), tuple(bags))


@dataclass(frozen=True)
class TreewidthResult:
    width: int
    decomposition: TreeDecomposition
    ordering: tuple[int, ...]


def treewidth_dp(g: Graph) -> TreewidthResult:
    """Exact tree-width via the subset dynamic program, with a certificate.

    The returned ordering is the lexicographically smallest optimal one,
    so the decomposition is reproducible bit for bit.  tw of the empty
    graph is reported as -1 (the one-less-than-max-bag convention); the
    triangulation value tw+1 is the primary non-negative quantity.
    """
    if g.n > TREEWIDTH_CAP:
        raise CapExceededError(
            f"exact tree-width is capped at {TREEWIDTH_CAP} vertices"
        )
    if g.n == 0:
        return TreewidthResult(-1, EMPTY_DECOMPOSITION, ())
    adj = np.array(g.adj, np.int64)
    width, order_arr = _dp_kernel(adj, g.n)
    width = int(width)
    ordering = tuple(int(v) for v in order_arr)
    if sorted(ordering) != list(range(g.n)):
        raise SpinedError("internal error: reconstruction produced no ordering")
    td = decomposition_from_ordering(g, ordering)
    check = validate_tree_decomposition(g, td)
    if not check or td.width != width:
        raise SpinedError(f"internal error: certificate invalid ({check.problem})")
    return TreewidthResult(width, td, ordering)


def treewidth_oracle(g: Graph) -> int:
    """Brute-force tree-width over all elimination orderings (no shared code
    with :func:`treewidth_dp`)."""
    if g.n > ORACLE_CAP:
        raise CapExceededError(f"the ordering oracle is capped at {ORACLE_CAP} vertices")
    if g.n == 0:
        return -1
    return int(_oracle_kernel(np.array(g.adj, np.int64), g.n))


@dataclass(frozen=True)
class CompletionResult:
    graph: Graph
    embedding: Morphism
    width: int


def min_chordal_completion(g: Graph) -> CompletionResult:
    """A minimum chordal completion; ``width`` is its clique number (= tw+1).

    A chordal input is its own completion.  Otherwise the completion is
    the fill-in along the optimal elimination ordering of the subset DP,
    which certifies minimality directly.
    """
    if g.n > COMPLETION_CAP:
        raise CapExceededError(
            f"chordal completion search is capped at {COMPLETION_CAP} vertices"
        )
    if is_chordal(g):
        h = g
    else:
        h = fill_in(g, treewidth_dp(g).ordering)
        if not is_chordal(h):
            raise SpinedError("internal error: fill-in produced a non-chordal graph")
    width = clique_number(h)
    if width != treewidth_dp(g).width + 1:
        raise SpinedError("internal error: completion width disagrees with tw+1")
    embedding = Morphism(g, h, tuple(range(g.n)), "mono")
    return CompletionResult(h, embedding, width)


def maximal_cliques(g: Graph) -> list[int]:
    """All maximal cliques as bitmasks (Bron-Kerbosch with pivoting), sorted."""
    if g.n == 0:
        return []
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        pool = p | x
        pivot, best = -1, -1
        m = pool
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            c = bin(p & g.adj[u]).count("1")
            if c > best:
                pivot, best = u, c
        m = p & ~g.adj[pivot]
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            bk(r | (1 << v), p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, (1 << g.n) - 1, 0)
    return sorted(out)


def clique_tree(g: Graph) -> TreeDecomposition:
    """A tree decomposition of a chordal graph whose bags are exactly the
    maximal cliques; each tree edge records a shared sub-clique, so the tree
    witnesses the graph as an iterated clique sum of complete graphs."""
    if not is_chordal(g):
        raise NotChordalError("clique trees exist only for chordal graphs")
    cliques = maximal_cliques(g)
    k = len(cliques)
    if k == 0:
        return EMPTY_DECOMPOSITION
    # Maximum-weight spanning forest of the clique graph (weights are
    # intersection sizes), then chain the component representatives.
    parent = list(range(k))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    candidates = sorted(
        ((-bin(cliques[i] & cliques[j]).count("1"), i, j)
         for i in range(k) for j in range(i + 1, k)),
    )
    edges = []
    for negw, i, j in candidates:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            edges.append((i, j))
    td = TreeDecomposition(
        from_edges(k, edges),
        tuple(
            tuple(v for v in range(g.n) if c >> v & 1) for c in cliques
        ),
    )
    check = validate_tree_decomposition(g, td)
    if not check:
        raise SpinedError(f"internal error: clique tree invalid ({check.problem})")
    return td


def triangulation_graph(g: Graph) -> int:
    """The triangulation value tw(g) + 1.

    Cross-checks that the minimum chordal completion realizes the same
    width, i.e. that the two routes to the value coincide on ``g``.
    """
    res = treewidth_dp(g)
    if g.n:
        h = fill_in(g, res.ordering)
        if clique_number(h) != res.width + 1:
            raise SpinedError("internal error: chordal completion width mismatch")
    return res.width + 1
