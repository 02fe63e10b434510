import numpy as np
import pytest
from hypothesis import settings

from spinedcat import _kernels
from spinedcat.corpus import graphs_up_to_iso

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Trigger jit compilation once so timed tests measure the algorithms."""
    adj = np.array([1 << 1, 1 << 0], np.int64)
    _kernels.treewidth_dp(adj, 2)
    _kernels.treewidth_oracle(adj, 2)
    out = np.zeros(1, np.int64)
    _kernels.canonical_codes(np.array([1], np.int64), 2, np.array([[0, 1], [1, 0]], np.int64), out)


@pytest.fixture(scope="session")
def corpus7():
    return graphs_up_to_iso(7)


@pytest.fixture(scope="session")
def corpus6(corpus7):
    return tuple(g for g in corpus7 if g.n <= 6)
