"""The jitted kernels and their pure-python twins must agree exactly."""

import random

import numpy as np
import pytest

from spinedcat import _kernels as K
from spinedcat._accel import JIT_ENABLED
from spinedcat.corpus import _perm_table, graph_code
from spinedcat.graph import is_isomorphic, random_graph


def _adj(g):
    return np.array(g.adj, np.int64)


def test_variants_agree_on_random_graphs():
    rng = random.Random(71)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 7), rng.choice([0.2, 0.5, 0.8]))
        w_default, order_default = K.treewidth_dp(_adj(g), g.n)
        w_py, order_py = K.treewidth_dp_py(_adj(g), g.n)
        assert int(w_default) == int(w_py)
        assert list(order_default) == list(order_py)
        assert int(K.treewidth_oracle(_adj(g), g.n)) == int(
            K.treewidth_oracle_py(_adj(g), g.n)
        ) == int(w_py)


def test_variants_agree_on_a_midsize_graph():
    g = random_graph(random.Random(77), 12, 0.3)
    w_default, order_default = K.treewidth_dp(_adj(g), g.n)
    w_py, order_py = K.treewidth_dp_py(_adj(g), g.n)
    assert int(w_default) == int(w_py)
    assert list(order_default) == list(order_py)


def test_canonical_code_variants_agree():
    rng = random.Random(73)
    n = 5
    codes = np.array(
        [graph_code(random_graph(rng, n, 0.5)) for _ in range(30)], np.int64
    )
    out_default = np.zeros(len(codes), np.int64)
    out_py = np.zeros(len(codes), np.int64)
    K.canonical_codes(codes, n, _perm_table(n), out_default)
    K.canonical_codes_py(codes, n, _perm_table(n), out_py)
    assert list(out_default) == list(out_py)


def test_canonical_code_separates_isomorphism_classes():
    rng = random.Random(79)
    n = 5
    graphs = [random_graph(rng, n, 0.5) for _ in range(20)]
    codes = np.array([graph_code(g) for g in graphs], np.int64)
    out = np.zeros(len(codes), np.int64)
    K.canonical_codes(codes, n, _perm_table(n), out)
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            assert (out[i] == out[j]) == is_isomorphic(graphs[i], graphs[j])


@pytest.mark.skipif(not JIT_ENABLED, reason="jit disabled in this run")
def test_jit_is_actually_compiled():
    assert K.treewidth_dp is not K.treewidth_dp_py
    assert hasattr(K.treewidth_dp, "signatures")
