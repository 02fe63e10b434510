import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinedcat.core import (
    CapExceededError,
    InvalidMorphismError,
    Morphism,
    SFunctorSpec,
    SpineMismatchError,
    check_sc1,
    check_spinal,
    sample_spans,
)
from spinedcat.chordal import treewidth_dp, validate_tree_decomposition
from spinedcat.graph import (
    clique_sum,
    complete_graph,
    discrete_graph,
    from_edges,
)
from spinedcat.hypergraph import (
    Hypergraph,
    enumerate_hypergraph_monomorphisms,
    from_edge_sets,
    gaifman,
    gaifman_morphism,
    hgr_instance,
    hgr_proxy_pushout,
    hypergraph_treewidth,
    hypergraph_treewidth_direct,
    random_hypergraph,
    sample_hgr_span,
    spine_hypergraph,
)


@st.composite
def hypergraphs(draw, max_n=5, max_edges=6):
    n = draw(st.integers(0, max_n))
    count = draw(st.integers(0, max_edges))
    masks = draw(
        st.lists(st.integers(0, (1 << n) - 1), min_size=0, max_size=count)
    )
    return Hypergraph(n, tuple(sorted(set(masks))))


def test_spine_hypergraph():
    assert spine_hypergraph(0).edges == (0,)
    assert len(spine_hypergraph(2).edges) == 4
    s3 = spine_hypergraph(3)
    assert len(s3.edges) == 8
    assert gaifman(s3) == complete_graph(3)
    with pytest.raises(CapExceededError):
        spine_hypergraph(17)


def test_gaifman_examples():
    for n in range(7):
        assert gaifman(spine_hypergraph(min(n, 6))) == complete_graph(min(n, 6))
    h = from_edge_sets(5, [[0, 1, 2]])
    g = gaifman(h)
    assert g.edges == ((0, 1), (0, 2), (1, 2))
    singletons = from_edge_sets(4, [[0], [1], [2], [3]])
    assert gaifman(singletons) == discrete_graph(4)


def test_hypergraph_monomorphism_enumeration():
    g = from_edge_sets(2, [[0], [0, 1]])
    h = spine_hypergraph(3)
    found = enumerate_hypergraph_monomorphisms(g, h)
    assert len(found) == 6  # every injective pair works into the full powerset
    # an edge that has no image kills everything
    g2 = from_edge_sets(2, [[0, 1]])
    h2 = from_edge_sets(2, [[0], [1]])
    assert enumerate_hypergraph_monomorphisms(g2, h2) == []
    # the empty hyperedge must be present in the codomain
    g3 = from_edge_sets(1, [[]])
    h3 = from_edge_sets(2, [[0]])
    assert enumerate_hypergraph_monomorphisms(g3, h3) == []
    assert len(enumerate_hypergraph_monomorphisms(g3, spine_hypergraph(2))) == 2


def test_proxy_pushout_self_gluing_absorbs():
    s2 = spine_hypergraph(2)
    ident = Morphism(s2, s2, (0, 1), "hypergraph-mono")
    cocone = hgr_proxy_pushout(ident, ident)
    assert cocone.apex == s2
    assert cocone.left.mapping == (0, 1) and cocone.right.mapping == (0, 1)


def test_proxy_pushout_triangles_share_edge():
    s2 = spine_hypergraph(2)
    tri = from_edge_sets(3, [[], [0], [1], [2], [0, 1], [0, 2], [1, 2], [0, 1, 2]])
    left = Morphism(s2, tri, (0, 1), "hypergraph-mono")
    right = Morphism(s2, tri, (0, 1), "hypergraph-mono")
    cocone = hgr_proxy_pushout(left, right)
    assert cocone.apex.n == 4
    expected = clique_sum(
        Morphism(complete_graph(2), gaifman(tri), (0, 1), "mono"),
        Morphism(complete_graph(2), gaifman(tri), (0, 1), "mono"),
    ).apex
    assert gaifman(cocone.apex) == expected


def test_proxy_pushout_disjoint_union_over_empty_spine():
    s0 = spine_hypergraph(0)
    a = from_edge_sets(2, [[], [0, 1]])
    b = from_edge_sets(1, [[], [0]])
    cocone = hgr_proxy_pushout(
        Morphism(s0, a, (), "hypergraph-mono"),
        Morphism(s0, b, (), "hypergraph-mono"),
    )
    assert cocone.apex.n == 3
    assert set(cocone.apex.edge_sets) == {
        frozenset(),
        frozenset({0, 1}),
        frozenset({2}),
    }


def test_proxy_pushout_rejects_bad_input():
    s2 = spine_hypergraph(2)
    tri = from_edge_sets(3, [[0, 1]])
    with pytest.raises(InvalidMorphismError):
        hgr_proxy_pushout(
            Morphism(s2, tri, (0, 1), "hypergraph-mono"),
            Morphism(s2, tri, (0, 1), "hypergraph-mono"),
        )
    not_spine = from_edge_sets(2, [[0]])
    with pytest.raises(SpineMismatchError):
        hgr_proxy_pushout(
            Morphism(not_spine, tri, (0, 1), "hypergraph-mono"),
            Morphism(not_spine, tri, (0, 1), "hypergraph-mono"),
        )


def test_gaifman_is_spinal_at_desk_scale():
    rng = random.Random(31)
    for _ in range(30):
        span = sample_hgr_span(rng, 5)
        cocone = hgr_proxy_pushout(span.left, span.right)
        graph_cocone = clique_sum(
            gaifman_morphism(span.left), gaifman_morphism(span.right)
        )
        assert gaifman(cocone.apex) == graph_cocone.apex
        assert gaifman_morphism(cocone.left).mapping == graph_cocone.left.mapping


def test_hypergraph_treewidth_examples():
    for n in range(1, 6):
        width, td = hypergraph_treewidth(spine_hypergraph(n))
        assert width == n - 1
        assert validate_tree_decomposition(spine_hypergraph(n), td).ok
    single = from_edge_sets(6, [[0, 1, 2, 3]])
    assert hypergraph_treewidth(single)[0] == 3
    # 2-uniform hypergraphs agree with the graph engine
    g = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    h = from_edge_sets(5, [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]])
    assert hypergraph_treewidth(h)[0] == treewidth_dp(g).width == 2


def test_direct_oracle_examples():
    assert hypergraph_treewidth_direct(from_edge_sets(3, [[0, 1], [1, 2]])) == 1
    assert hypergraph_treewidth_direct(from_edge_sets(4, [])) == 0
    assert hypergraph_treewidth_direct(from_edge_sets(0, [])) == -1
    with pytest.raises(CapExceededError):
        hypergraph_treewidth_direct(from_edge_sets(8, []))


@given(hypergraphs())
@settings(max_examples=40)
def test_direct_oracle_matches_engine(h):
    assert hypergraph_treewidth(h)[0] == hypergraph_treewidth_direct(h)


def test_empty_hyperedge_counts_as_covered():
    # the spine contains the empty hyperedge; any decomposition covers it,
    # including the empty decomposition of the empty hypergraph
    from spinedcat.chordal import EMPTY_DECOMPOSITION, TreeDecomposition
    from spinedcat.graph import complete_graph as k

    only_empty = from_edge_sets(0, [[]])
    assert validate_tree_decomposition(only_empty, EMPTY_DECOMPOSITION).ok
    h = from_edge_sets(2, [[], [0, 1]])
    td = TreeDecomposition(k(1), ((0, 1),))
    assert validate_tree_decomposition(h, td).ok


def test_decompositions_validate_against_hypergraph_not_just_gaifman():
    rng = random.Random(41)
    for _ in range(25):
        h = random_hypergraph(rng, rng.randint(1, 6), 6)
        width, td = hypergraph_treewidth(h)
        check = validate_tree_decomposition(h, td)
        assert check.ok and td.width == width


def test_hgr_instance_axioms():
    inst = hgr_instance()
    rng = random.Random(3)
    for _ in range(15):
        h = random_hypergraph(rng, rng.randint(0, 4), 5)
        assert check_sc1(inst, h).index <= h.n
    delta = SFunctorSpec(
        "hypergraph-triangulation", lambda x: treewidth_dp(gaifman(x)).width + 1
    )
    spans = sample_spans(inst, 25, seed=13, max_part=4)
    verdict = check_spinal(inst, delta, spans, sf1_indices=range(5))
    assert verdict.ok
