"""Allocate external excitation signals so a dynamic network model set,
with parametrized and fixed modules, is generically identifiable.

Typical use::

    from simug import NetworkModelSpec, plan
    spec = NetworkModelSpec(3, 0, [(1, 2, "p"), (2, 3, "p"), (3, 1, "f")])
    plan(spec).new_signals        # frozenset({1})
"""
from .allocation import (AllocationError, AllocationPlan, ComparisonReport, Method, allocate,
                         compare_with_baseline, existing_excitation, plan, prune)
from .covering import (CharacteristicMatrix, Covering, MergeMode, MergeSymbol, NotMergeableError,
                       NothingToCoverError, PseudotreeMode, characteristic_matrix_direct,
                       initial_characteristic_matrix, initial_covering, merge_step, merge_symbols,
                       mergeable, pseudotree_baseline, reduce_covering, trace_reduction)
from .graph import (Edge, EdgeKind, ExtendedGraph, NetworkModelSpec, Simug, SpecError, build_extended_graph,
                    compute_roots, edge_disjoint, is_simug, parametrized_in_set)
from .identifiability import (Certificate, excitation_set, generic_rank_oracle, max_vertex_disjoint_paths,
                              verify_identifiability)
from .kernels import BACKEND

__version__ = "0.1.0"
