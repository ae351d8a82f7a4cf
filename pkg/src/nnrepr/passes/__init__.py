"""Semantics-preserving conversion passes"""

from .circuits import (
    at_least,
    at_most,
    comparator,
    depth3_size,
    hnn_to_circuit,
    hnn_to_depth2,
    hnn_to_depth3,
    hnn_to_depth3_slice,
)
from .knn import knn_subset_terms, knn_to_kstat, knn_to_mpptf, kstat_to_knn
from .kstat import (
    distinctify,
    is_split,
    kstat_equalize,
    labeled_to_twosided,
    materialised_twosided,
    twosided_to_labeled,
)
from .ldl import eldl_to_kstat, mpptf_to_ldl
from .nn_mpptf import (
    HnnPlan,
    block_weight,
    mpptf_to_hnn,
    mpptf_to_kstat,
    mpptf_to_nn,
    nn_to_mpptf,
    plan_hnn,
    realise_anchors,
    shared_offset,
)
from .registry import ConversionPass, available_passes, get_pass, register_pass, unregister_pass
from .report import bound, build_report
from .symmetric import (
    SymAndCircuit,
    SymMajCircuit,
    clause_anchor,
    ip_clauses,
    parity_top,
    sym_and_to_knn,
    sym_maj_to_kstat,
    threshold_gate_form,
)

__all__ = [
    # NN and mpPTF
    'nn_to_mpptf',
    'mpptf_to_hnn',
    'mpptf_to_nn',
    'mpptf_to_kstat',
    'plan_hnn',
    'HnnPlan',
    'block_weight',
    'realise_anchors',
    'shared_offset',
    # kNN and order statistics
    'knn_to_mpptf',
    'knn_subset_terms',
    'knn_to_kstat',
    'kstat_to_knn',
    'kstat_equalize',
    'distinctify',
    'twosided_to_labeled',
    'labeled_to_twosided',
    'materialised_twosided',
    'is_split',
    # Decision lists
    'mpptf_to_ldl',
    'eldl_to_kstat',
    # Symmetric gates
    'SymMajCircuit',
    'SymAndCircuit',
    'threshold_gate_form',
    'parity_top',
    'ip_clauses',
    'clause_anchor',
    'sym_maj_to_kstat',
    'sym_and_to_knn',
    # Circuits
    'comparator',
    'at_most',
    'at_least',
    'depth3_size',
    'hnn_to_depth3',
    'hnn_to_depth3_slice',
    'hnn_to_depth2',
    'hnn_to_circuit',
    # Registry
    'ConversionPass',
    'register_pass',
    'unregister_pass',
    'get_pass',
    'available_passes',
    'bound',
    'build_report',
]
