import random
from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinedcat import core
from spinedcat.core import CapExceededError, InvalidMorphismError, Morphism
from spinedcat.corpus import graph_from_code
from spinedcat.graph import (
    Graph,
    apex_extension,
    clique_number,
    clique_sum,
    complement,
    complete_graph,
    cycle_graph,
    discrete_graph,
    enumerate_homomorphisms,
    enumerate_monomorphisms,
    from_edges,
    grph_mono_instance,
    is_homomorphism,
    is_isomorphic,
    is_monomorphism,
    path_graph,
    random_graph,
    sample_clique_span,
)


@st.composite
def graphs(draw, max_n=7, min_n=0):
    n = draw(st.integers(min_n, max_n))
    code = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return graph_from_code(n, code)


def test_constructors():
    assert complete_graph(0) == Graph(0, ())
    assert complete_graph(4).edge_count == 6
    assert discrete_graph(5).edge_count == 0
    c5 = cycle_graph(5)
    assert c5.edge_count == 5
    assert all(c5.degree(v) == 2 for v in range(5))
    with pytest.raises(ValueError):
        cycle_graph(2)


def test_graph_validation():
    with pytest.raises(ValueError):
        from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        from_edges(2, [(0, 3)])
    with pytest.raises(CapExceededError):
        discrete_graph(65)


def test_apex_extension():
    assert apex_extension(complete_graph(0)) == complete_graph(1)
    for n in range(6):
        assert apex_extension(complete_graph(n)) == complete_graph(n + 1)
    wheel = apex_extension(cycle_graph(4))
    assert wheel.n == 5 and wheel.edge_count == 8


def test_complement_trivia():
    for n in range(6):
        assert complement(complete_graph(n)) == discrete_graph(n)
    assert is_isomorphic(complement(cycle_graph(5)), cycle_graph(5))


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


def test_homomorphism_predicates():
    k3 = complete_graph(3)
    ident = Morphism(k3, k3, (0, 1, 2), "mono")
    assert is_homomorphism(ident) and is_monomorphism(ident)
    collapse = Morphism(discrete_graph(2), complete_graph(1), (0, 0), "graph-homo")
    assert is_homomorphism(collapse) and not is_monomorphism(collapse)
    # no map K_2 -> discrete can preserve the edge
    k2, d2 = complete_graph(2), discrete_graph(2)
    for mapping in product(range(2), repeat=2):
        assert not is_homomorphism(Morphism(k2, d2, mapping, "graph-homo"))


def test_enumerate_monomorphism_counts():
    assert len(enumerate_monomorphisms(complete_graph(1), complete_graph(3))) == 3
    assert len(enumerate_monomorphisms(complete_graph(2), complete_graph(3))) == 6
    assert enumerate_monomorphisms(complete_graph(3), cycle_graph(4)) == []


def test_enumeration_is_lexicographic_and_capped():
    found = enumerate_monomorphisms(complete_graph(2), complete_graph(3))
    assert [m.mapping for m in found] == sorted(m.mapping for m in found)
    with pytest.raises(CapExceededError):
        enumerate_monomorphisms(discrete_graph(9), discrete_graph(9))
    limited = enumerate_monomorphisms(
        complete_graph(2), complete_graph(3), limit=2
    )
    assert len(limited) == 2 and limited == found[:2]


def test_clique_number_against_exhaustive(corpus6):
    for g in corpus6:
        if g.n > 5:
            continue
        best = 0
        for k in range(g.n, 0, -1):
            if any(
                all(g.has_edge(u, v) for u, v in combinations(c, 2))
                for c in combinations(range(g.n), k)
            ):
                best = k
                break
        assert clique_number(g) == best


def _mono(k, g, mapping):
    return Morphism(complete_graph(k), g, mapping, "mono")


def test_clique_sum_two_triangles():
    k3 = complete_graph(3)
    cocone = clique_sum(_mono(2, k3, (0, 1)), _mono(2, k3, (0, 1)))
    assert cocone.apex.n == 4 and cocone.apex.edge_count == 5


def test_clique_sum_glued_edges_is_path():
    k2 = complete_graph(2)
    cocone = clique_sum(_mono(1, k2, (0,)), _mono(1, k2, (0,)))
    assert cocone.apex.n == 3 and cocone.apex.edge_count == 2
    assert is_isomorphic(cocone.apex, path_graph(3))
    # first leg is the identity on indices
    assert cocone.left.mapping == (0, 1)


def test_clique_sum_absorbs_subclique():
    rng = random.Random(5)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 6), 0.5)
        k = rng.randint(0, clique_number(g))
        cliques = [
            c
            for c in combinations(range(g.n), k)
            if all(g.has_edge(u, v) for u, v in combinations(c, 2))
        ]
        anchor = rng.choice(cliques)
        cocone = clique_sum(
            _mono(k, g, anchor),
            _mono(k, complete_graph(k), tuple(range(k))),
        )
        assert is_isomorphic(cocone.apex, g)


def test_clique_sum_rejects_bad_legs():
    k2, k3 = complete_graph(2), complete_graph(3)
    with pytest.raises(InvalidMorphismError):
        clique_sum(
            Morphism(k2, discrete_graph(2), (0, 1), "mono"),
            _mono(2, k3, (0, 1)),
        )
    with pytest.raises(core.SpineMismatchError):
        clique_sum(_mono(2, k3, (0, 1)), _mono(1, k3, (0,)))
    with pytest.raises(core.SpineMismatchError):
        clique_sum(
            Morphism(path_graph(3), complete_graph(3), (0, 1, 2), "mono"),
            Morphism(path_graph(3), complete_graph(3), (0, 1, 2), "mono"),
        )


def test_clique_sum_symmetric_up_to_isomorphism():
    rng = random.Random(11)
    for _ in range(40):
        span = sample_clique_span(rng, 5)
        a = clique_sum(span.left, span.right).apex
        b = clique_sum(span.right, span.left).apex
        assert is_isomorphic(a, b)


def test_clique_sum_universal_property_in_homo_category():
    # Over a monic span, every commuting cocone in the homomorphism
    # category factors through the clique sum by exactly one map.
    rng = random.Random(23)
    for _ in range(6):
        span = sample_clique_span(rng, 3)
        cocone = clique_sum(span.left, span.right)
        apex = cocone.apex
        z = random_graph(rng, rng.randint(1, 3), 0.7)
        lefts = enumerate_homomorphisms(span.left.codomain, z)
        rights = enumerate_homomorphisms(span.right.codomain, z)
        by_restriction = {}
        for zl in lefts:
            key = tuple(zl.mapping[v] for v in span.left.mapping)
            by_restriction.setdefault(key, []).append(zl)
        pairs = [
            (zl, zr)
            for zr in rights
            for zl in by_restriction.get(
                tuple(zr.mapping[v] for v in span.right.mapping), []
            )
        ]
        all_homs = enumerate_homomorphisms(apex, z)
        for zl, zr in pairs[:40]:
            matching = [
                m
                for m in all_homs
                if all(m.mapping[cocone.left.mapping[v]] == zl.mapping[v]
                       for v in range(zl.domain.n))
                and all(m.mapping[cocone.right.mapping[v]] == zr.mapping[v]
                        for v in range(zr.domain.n))
            ]
            assert len(matching) == 1


def test_grph_instance_sc1_small(corpus6):
    inst = grph_mono_instance()
    for g in corpus6:
        if g.n <= 5:
            witness = core.check_sc1(inst, g)
            assert witness.index == g.n
            assert is_monomorphism(witness.morphism)


@given(graphs(max_n=6), st.randoms(use_true_random=False))
def test_isomorphism_invariant_under_relabeling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    assert is_isomorphic(g, h)


def test_isomorphism_distinguishes():
    assert not is_isomorphic(cycle_graph(4), path_graph(4))
    assert not is_isomorphic(complete_graph(3), path_graph(3))
