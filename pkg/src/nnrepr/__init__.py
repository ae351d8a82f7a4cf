"""
nnrepr - Exact nearest-neighbor and threshold representations of Boolean functions
"""

from .core.base import BasePass, BaseRepresentation, PassReport, PassTrace
from .core.config import Settings, configure_logging
from .core.errors import (
    ArityError,
    CheckpointError,
    ConversionError,
    NNReprError,
    RepresentationError,
    SearchBudgetExceeded,
)
from .core.types import CircuitVariant, EquivStatus, ModelKind, Output, PipelineState

# Boolean functions and representations
from .boolfn import BoolFn, CnfDnf, FamilySpec, Substitution, components, family, from_callable, from_truth_table
from .models import (
    DecisionList,
    KNNRep,
    KStat,
    LabeledKStat,
    LinearForm,
    MpPTF,
    NNRep,
    ThresholdCircuit,
    parse,
    serialize,
    well_defined,
)

# Passes, constructions and verification
from .passes import available_passes, get_pass
from .constructions import cnf_to_nn, construct, disj_hnn, omb_and2_mpptf, xor_mpptf
from .oracle import EquivReport, SearchResult, equiv_check, min_hnn_search
from .checkpoint import JsonCheckpointStore
from .core.pipeline import Pipeline, PipelineConfig

__version__ = "0.1.0"

__all__ = [
    # Pipeline
    'Pipeline',
    'PipelineConfig',
    # Base classes
    'BaseRepresentation',
    'BasePass',
    'PassReport',
    'PassTrace',
    # Types
    'Output',
    'ModelKind',
    'EquivStatus',
    'CircuitVariant',
    'PipelineState',
    # Configuration
    'Settings',
    'configure_logging',
    # Errors
    'NNReprError',
    'ArityError',
    'RepresentationError',
    'ConversionError',
    'SearchBudgetExceeded',
    'CheckpointError',
    # Boolean functions
    'BoolFn',
    'CnfDnf',
    'FamilySpec',
    'Substitution',
    'family',
    'from_truth_table',
    'from_callable',
    'components',
    # Representations
    'LinearForm',
    'NNRep',
    'KNNRep',
    'MpPTF',
    'KStat',
    'LabeledKStat',
    'DecisionList',
    'ThresholdCircuit',
    'well_defined',
    'serialize',
    'parse',
    # Passes and constructions
    'get_pass',
    'available_passes',
    'construct',
    'cnf_to_nn',
    'disj_hnn',
    'xor_mpptf',
    'omb_and2_mpptf',
    # Verification
    'EquivReport',
    'SearchResult',
    'equiv_check',
    'min_hnn_search',
    'JsonCheckpointStore',
]
