import random
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinedcat.core import CapExceededError, Morphism
from spinedcat.chordal import (
    EMPTY_DECOMPOSITION,
    NotChordalError,
    TreeDecomposition,
    clique_tree,
    decomposition_from_ordering,
    fill_in,
    is_chordal,
    maximal_cliques,
    min_chordal_completion,
    treewidth_dp,
    treewidth_oracle,
    triangulation_graph,
    validate_tree_decomposition,
)
from spinedcat.corpus import free_trees, graph_from_code
from spinedcat.graph import (
    apex_extension,
    clique_number,
    clique_sum,
    complete_graph,
    cycle_graph,
    discrete_graph,
    from_edges,
    grph_mono_instance,
    path_graph,
    random_graph,
    sample_clique_span,
)


@st.composite
def graphs(draw, max_n=7, min_n=0):
    n = draw(st.integers(min_n, max_n))
    code = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return graph_from_code(n, code)


@st.composite
def graph_with_ordering(draw, max_n=7):
    g = draw(graphs(max_n=max_n, min_n=1))
    order = draw(st.permutations(range(g.n)))
    return g, tuple(order)


def test_validate_single_bag():
    g = cycle_graph(5)
    td = TreeDecomposition(complete_graph(1), ((0, 1, 2, 3, 4),))
    check = validate_tree_decomposition(g, td)
    assert check.ok and td.width == 4


def test_validate_path_decomposition():
    g = path_graph(3)
    td = TreeDecomposition(path_graph(2), ((0, 1), (1, 2)))
    assert validate_tree_decomposition(g, td).ok
    assert td.width == 1


def test_validate_rejects_disconnected_tree():
    g = path_graph(3)
    td = TreeDecomposition(discrete_graph(2), ((0, 1), (1, 2)))
    check = validate_tree_decomposition(g, td)
    assert not check.ok and check.problem == "tree-not-a-tree"


def test_validate_reports_uncovered_edge_and_vertex():
    g = path_graph(3)
    td = TreeDecomposition(complete_graph(1), ((0, 1),))
    check = validate_tree_decomposition(g, td)
    assert not check.ok and check.problem == "edge-not-covered"
    td2 = TreeDecomposition(path_graph(2), ((0, 1), (0, 1)))
    check2 = validate_tree_decomposition(g, td2)
    assert not check2.ok and check2.problem in (
        "edge-not-covered",
        "vertex-not-covered",
    )


def test_validate_broken_occurrence_subtree():
    g = path_graph(3)
    td = TreeDecomposition(
        path_graph(3), ((0, 1), (1, 2), (0,))
    )
    check = validate_tree_decomposition(g, td)
    assert not check.ok and check.problem == "occurrence-set-disconnected"


def _peo_is_perfect(g, order):
    pos = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        later = [u for u in range(g.n) if g.has_edge(u, v) and pos[u] > i]
        for a in later:
            for b in later:
                if a < b and not g.has_edge(a, b):
                    return False
    return True


def test_chordality_examples():
    for n in range(7):
        assert is_chordal(complete_graph(n)).chordal
    assert not is_chordal(cycle_graph(4)).chordal
    # independent check: all 24 orderings of the 4-cycle fail
    c4 = cycle_graph(4)
    assert not any(_peo_is_perfect(c4, order) for order in permutations(range(4)))
    two_triangles = from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    res = is_chordal(two_triangles)
    assert res.chordal and _peo_is_perfect(two_triangles, res.elimination)


@given(graphs(max_n=6))
def test_chordality_matches_elimination_search(g):
    found = any(_peo_is_perfect(g, order) for order in permutations(range(g.n)))
    assert is_chordal(g).chordal == found


def test_treewidth_ground_truth():
    assert treewidth_dp(discrete_graph(6)).width == 0
    for n in range(1, 8):
        assert treewidth_dp(complete_graph(n)).width == n - 1
    assert treewidth_dp(path_graph(5)).width == 1
    assert treewidth_dp(cycle_graph(4)).width == 2


def test_oracle_examples():
    assert treewidth_oracle(path_graph(3)) == 1
    assert treewidth_oracle(cycle_graph(5)) == 2
    k4_minus = from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert treewidth_oracle(k4_minus) == 2


def test_caps():
    with pytest.raises(CapExceededError):
        treewidth_oracle(discrete_graph(10))
    with pytest.raises(CapExceededError):
        treewidth_dp(discrete_graph(25))
    with pytest.raises(CapExceededError):
        min_chordal_completion(discrete_graph(17))


@given(graphs(max_n=7))
def test_dp_matches_oracle(g):
    assert treewidth_dp(g).width == treewidth_oracle(g)


@given(graphs(max_n=7))
def test_certificate_validates_with_reported_width(g):
    res = treewidth_dp(g)
    check = validate_tree_decomposition(g, res.decomposition)
    assert check.ok
    assert res.decomposition.width == res.width


def test_dp_ordering_is_lexicographically_minimal():
    g = cycle_graph(5)
    res = treewidth_dp(g)
    candidates = []
    for order in permutations(range(5)):
        h = fill_in(g, order)
        pos = {v: i for i, v in enumerate(order)}
        width = max(
            sum(1 for u in range(5) if h.has_edge(u, v) and pos[u] > pos[v])
            for v in order
        )
        if width == res.width:
            candidates.append(order)
    assert res.ordering == min(candidates)


def test_fill_in_examples():
    two_triangles = from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    peo = is_chordal(two_triangles).elimination
    assert fill_in(two_triangles, peo) == two_triangles
    filled = fill_in(cycle_graph(4), (0, 1, 2, 3))
    assert filled.edge_count == 5 and filled.has_edge(1, 3)
    assert fill_in(discrete_graph(5), (4, 2, 0, 1, 3)) == discrete_graph(5)
    with pytest.raises(ValueError):
        fill_in(cycle_graph(4), (0, 1, 2, 2))


@given(graph_with_ordering())
def test_fill_in_always_chordal_supergraph(data):
    g, order = data
    h = fill_in(g, order)
    assert is_chordal(h).chordal
    assert set(g.edges) <= set(h.edges)


def test_min_completion_identity_on_chordal():
    two_triangles = from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    res = min_chordal_completion(two_triangles)
    assert res.graph == two_triangles
    assert res.width == clique_number(two_triangles) == 3
    assert res.embedding.mapping == (0, 1, 2, 3)


def test_min_completion_cycles():
    res4 = min_chordal_completion(cycle_graph(4))
    assert res4.width == 3 and res4.graph.edge_count == 5
    assert min_chordal_completion(cycle_graph(6)).width == 3


@given(graphs(max_n=5, min_n=1))
def test_min_completion_matches_exhaustive_ordering_search(g):
    best = min(
        clique_number(fill_in(g, order)) for order in permutations(range(g.n))
    )
    assert min_chordal_completion(g).width == best == treewidth_dp(g).width + 1


def test_exhaustive_ordering_search_at_six_and_seven():
    rng = random.Random(83)
    samples = [cycle_graph(6), cycle_graph(7)]
    samples += [random_graph(rng, 6, 0.5) for _ in range(3)]
    samples += [random_graph(rng, 7, 0.4) for _ in range(2)]
    for g in samples:
        best = min(
            clique_number(fill_in(g, order)) for order in permutations(range(g.n))
        )
        assert best - 1 == treewidth_dp(g).width


@given(graphs(max_n=7, min_n=1), st.randoms(use_true_random=False))
def test_treewidth_is_isomorphism_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    assert treewidth_dp(g).width == treewidth_dp(h).width


def test_clique_tree_examples():
    td = clique_tree(complete_graph(4))
    assert td.bags == ((0, 1, 2, 3),) and td.tree.n == 1
    two_triangles = from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    td2 = clique_tree(two_triangles)
    assert sorted(td2.bags) == [(0, 1, 2), (1, 2, 3)]
    assert len(set(td2.bags[0]) & set(td2.bags[1])) == 2
    td3 = clique_tree(path_graph(3))
    assert sorted(td3.bags) == [(0, 1), (1, 2)]
    with pytest.raises(NotChordalError):
        clique_tree(cycle_graph(4))


def test_clique_tree_on_empty_and_discrete():
    assert clique_tree(complete_graph(0)) == EMPTY_DECOMPOSITION
    td = clique_tree(discrete_graph(3))
    assert validate_tree_decomposition(discrete_graph(3), td).ok
    assert td.bags == ((0,), (1,), (2,))


@given(graphs(max_n=6))
def test_clique_tree_bags_are_maximal_cliques(g):
    if not is_chordal(g).chordal:
        return
    td = clique_tree(g)
    expected = [
        tuple(v for v in range(g.n) if c >> v & 1) for c in maximal_cliques(g)
    ]
    assert sorted(td.bags) == sorted(expected)
    assert validate_tree_decomposition(g, td).ok


def test_triangulation_examples():
    for n in range(7):
        assert triangulation_graph(complete_graph(n)) == n
    assert triangulation_graph(cycle_graph(4)) == 3


def test_triangulation_of_clique_with_cycle():
    for n in range(3, 7):
        k1 = complete_graph(1)
        cocone = clique_sum(
            Morphism(k1, complete_graph(n), (0,), "mono"),
            Morphism(k1, cycle_graph(n), (0,), "mono"),
        )
        assert triangulation_graph(cocone.apex) == n


def test_clique_sum_distributivity_sampled():
    rng = random.Random(17)
    for _ in range(60):
        span = sample_clique_span(rng, 6)
        cocone = grph_mono_instance().proxy_pushout(span)
        assert triangulation_graph(cocone.apex) == max(
            triangulation_graph(span.left.codomain),
            triangulation_graph(span.right.codomain),
        )


def test_triangulation_monotone_under_monomorphisms():
    rng = random.Random(19)
    for _ in range(25):
        h = random_graph(rng, rng.randint(1, 7), 0.5)
        k = rng.randint(0, h.n)
        sub = sorted(rng.sample(range(h.n), k))
        g = from_edges(
            k,
            [
                (i, j)
                for i in range(k)
                for j in range(i + 1, k)
                if h.has_edge(sub[i], sub[j])
            ],
        )
        mono = Morphism(g, h, tuple(sub), "mono")
        assert mono.kind == "mono"
        assert triangulation_graph(g) <= triangulation_graph(h)


@given(graphs(max_n=6))
def test_apex_law(g):
    assert triangulation_graph(apex_extension(g)) == triangulation_graph(g) + 1


def test_trees_have_treewidth_one():
    for n in range(2, 9):
        for t in free_trees(n):
            assert treewidth_dp(t).width == 1


def test_decomposition_from_ordering_handles_disconnected():
    g = from_edges(5, [(0, 1), (2, 3)])
    td = decomposition_from_ordering(g, (0, 1, 2, 3, 4))
    assert validate_tree_decomposition(g, td).ok


def test_empty_graph_conventions():
    res = treewidth_dp(complete_graph(0))
    assert res.width == -1 and res.decomposition == EMPTY_DECOMPOSITION
    assert treewidth_oracle(complete_graph(0)) == -1
    assert triangulation_graph(complete_graph(0)) == 0
    assert validate_tree_decomposition(complete_graph(0), EMPTY_DECOMPOSITION).ok
