from .circuit import Gate, ThresholdCircuit, and_gate, eval_circuit, or_gate
from .dlist import DecisionEntry, DecisionList, eval_dlist
from .forms import LinearForm, dummy_bound, integer_scale
from .io import Document, dump, load, parse, serialize
from .metrics import measure
from .nn import (
    AnchorRepresentation,
    KNNRep,
    NNRep,
    WellDefinedReport,
    bit_complexity,
    distance_form,
    eval_knn,
    eval_nn,
    squared_distance,
    well_defined,
)
from .rational import Rational, bit_length, to_fraction
from .symmetric import SymAndCircuit, SymMajCircuit
from .threshold import KStat, LabeledKStat, MpPTF, eval_kstat, eval_labeled_kstat, eval_mpptf

__all__ = [
    # Scalars and forms
    'Rational',
    'to_fraction',
    'bit_length',
    'LinearForm',
    'integer_scale',
    'dummy_bound',
    # Representations
    'AnchorRepresentation',
    'NNRep',
    'KNNRep',
    'MpPTF',
    'KStat',
    'LabeledKStat',
    'SymMajCircuit',
    'SymAndCircuit',
    'DecisionEntry',
    'DecisionList',
    'Gate',
    'ThresholdCircuit',
    'and_gate',
    'or_gate',
    # Evaluators
    'eval_nn',
    'eval_knn',
    'eval_mpptf',
    'eval_kstat',
    'eval_labeled_kstat',
    'eval_dlist',
    'eval_circuit',
    'squared_distance',
    'distance_form',
    'bit_complexity',
    'well_defined',
    'WellDefinedReport',
    'measure',
    # Documents
    'Document',
    'serialize',
    'parse',
    'load',
    'dump',
]
