"""Spined categories as executable finite mathematics.

Five runnable spined categories (graphs with injective homomorphisms,
hypergraphs, graphs with reflexive monomorphisms, vertex labelings,
integers under divisibility), generic axiom checkers for them, and the
triangulation value computed exactly in each: graph tree-width,
hypergraph tree-width, complemented tree-width, and modular/chromatic
tree-width, all with certified decompositions.
"""

from .core import (
    CapExceededError,
    CoconeDiagram,
    Morphism,
    SC1Witness,
    SC2Verdict,
    SFunctorSpec,
    SpanDiagram,
    SpinalVerdict,
    SpinedError,
    SpinedInstance,
    check_sc1,
    check_sc2,
    check_spinal,
    compose,
    generalized_clique,
    identity_morphism,
    object_order,
    sample_spans,
    sfunctor_join,
)
from .graph import (
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
)
from .chordal import (
    CompletionResult,
    TreeDecomposition,
    TreewidthResult,
    clique_tree,
    fill_in,
    is_chordal,
    min_chordal_completion,
    treewidth_dp,
    treewidth_oracle,
    triangulation_graph,
    validate_tree_decomposition,
)
from .hypergraph import (
    Hypergraph,
    gaifman,
    hgr_instance,
    hgr_proxy_pushout,
    hypergraph_treewidth,
    hypergraph_treewidth_direct,
    spine_hypergraph,
)
from .complement import (
    IndependentGluing,
    complement_functor_check,
    complemented_treewidth,
    independence_number,
    independent_gluing,
    is_reflexive_homomorphism,
    rmono_instance,
)
from .induced import (
    Labeling,
    chromatic_treewidth,
    induced_instance,
    is_modular_labeling,
    is_module,
    is_proper_coloring,
    modular_treewidth,
    quotient_graph,
)
from .witness import (
    DivObject,
    Poset,
    demo_clique_failure,
    demo_order_failure,
    demo_poset_no_sfunctor,
    max_prime_exponent,
    ndiv_instance,
    poset_pushout,
    pseudo_chordal_witness,
)

__version__ = "0.1.0"
