"""Pass registry keyed by "<source>-to-<target>" names."""
import logging
from math import comb
from typing import Any, Callable, Dict, List, Optional

from ..core.base import BasePass, BaseRepresentation, BoundCheck, PassReport
from ..core.types import CircuitVariant, ModelKind
from ..models.circuit import ThresholdCircuit
from ..models.dlist import DecisionList
from ..models.nn import AnchorRepresentation, KNNRep, NNRep, bit_complexity
from ..models.symmetric import SymAndCircuit, SymMajCircuit
from ..models.threshold import KStat, LabeledKStat, MpPTF
from . import circuits, knn, kstat, ldl, nn_mpptf, symmetric
from .report import bound, build_report

logger = logging.getLogger(__name__)

Checks = Callable[[Any, Any], List[BoundCheck]]
Notes = Callable[[Any, Any], Dict[str, Any]]


class ConversionPass(BasePass):
    """A registered conversion with the bounds its construction guarantees"""

    def __init__(
        self,
        name: str,
        description: str,
        source: ModelKind,
        target: ModelKind,
        convert: Callable[..., BaseRepresentation],
        checks: Optional[Checks] = None,
        notes: Optional[Notes] = None
    ):
        self.name = name
        self.description = description
        self.source = source
        self.target = target
        self._convert = convert
        self._checks = checks
        self._notes = notes

    def run(self, source: BaseRepresentation, **kwargs: Any) -> BaseRepresentation:
        logger.debug("running pass %s", self.name)
        return self._convert(source, **kwargs)

    def report(
        self,
        source: BaseRepresentation,
        output: BaseRepresentation
    ) -> PassReport:
        bounds = self._checks(source, output) if self._checks else []
        notes = self._notes(source, output) if self._notes else {}
        report = build_report(self.name, self.source, output, bounds, notes)
        for check in report.bounds:
            if not check.met:
                logger.warning(
                    "%s: %s is %d, expected %s %d",
                    self.name, check.metric, check.actual, check.relation, check.value
                )
        return report


# Bounds per construction

def _nn_mpptf_checks(r: AnchorRepresentation, m: MpPTF) -> List[BoundCheck]:
    checks = [bound("terms", "==", r.anchor_count, m.terms)]
    if r.boolean:
        checks.append(bound("max_weight", "<=", r.dimension, m.max_weight))
    return checks


def _nn_mpptf_notes(r: AnchorRepresentation, m: MpPTF) -> Dict[str, Any]:
    return {"source_bit_complexity": bit_complexity(r), "max_weight": m.max_weight}


def _hnn_checks(m: MpPTF, r: NNRep) -> List[BoundCheck]:
    plan = nn_mpptf.plan_hnn(m)
    return [
        bound("dimension", "<=", plan.bound, r.dimension),
        bound("anchors", "==", m.terms, r.anchor_count),
    ]


def _hnn_notes(m: MpPTF, r: NNRep) -> Dict[str, Any]:
    plan = nn_mpptf.plan_hnn(m)
    return {
        "layout": plan.layout,
        "W": nn_mpptf.block_weight(m),
        "statement_bound": plan.statement_bound,
        "statement_bound_met": r.dimension <= plan.statement_bound,
    }


def _rational_nn_checks(m: MpPTF, r: NNRep) -> List[BoundCheck]:
    return [
        bound("dimension", "==", m.arity + 4, r.dimension),
        bound("anchors", "==", m.terms, r.anchor_count),
    ]


def _knn_mpptf_checks(r: KNNRep, m: MpPTF) -> List[BoundCheck]:
    return [bound("terms", "<=", comb(r.anchor_count, r.k) + 1, m.terms)]


def _knn_mpptf_notes(r: KNNRep, m: MpPTF) -> Dict[str, Any]:
    subsets = comb(r.anchor_count, r.k)
    return {"subset_terms": subsets, "padding": m.terms - subsets}


def _equal_k_checks(_: Any, s: KStat) -> List[BoundCheck]:
    return [bound("k_left", "==", s.k_right, s.k_left)]


def _kstat_knn_checks(s: KStat, r: KNNRep) -> List[BoundCheck]:
    t = max(s.k_left, s.k_right)
    return [
        bound("k", "==", 2 * t - 1, r.k),
        bound("dimension", "==", s.arity + 4, r.dimension),
    ]


def _labeled_checks(s: KStat, out: LabeledKStat) -> List[BoundCheck]:
    big_k = s.k_left + s.k_right
    return [
        bound("forms", "==", big_k * len(s.left) + (big_k + 1) * len(s.right), len(out.forms)),
        bound("k", "==", (big_k - 1) * (big_k + 1) + 1, out.k),
    ]


def _twosided_checks(s: LabeledKStat, out: KStat) -> List[BoundCheck]:
    if kstat.is_split(s, out):
        return [
            bound("forms", "==", 2 * len(s.forms), out.forms),
            bound("k_left", "==", s.k, out.k_left),
        ]
    return [
        bound("forms", "<=", max(2, 1 << s.arity), out.forms),
        bound("k_left", "==", 1, out.k_left),
    ]


def _twosided_notes(s: LabeledKStat, out: KStat) -> Dict[str, Any]:
    return {"construction": "split" if kstat.is_split(s, out) else "truth-table"}


def _sym_maj_checks(c: SymMajCircuit, out: LabeledKStat) -> List[BoundCheck]:
    s = len(c.gates)
    return [
        bound("forms", "==", 2 * s + 1, len(out.forms)),
        bound("k", "==", s + 1, out.k),
    ]


def _sym_and_checks(c: SymAndCircuit, r: KNNRep) -> List[BoundCheck]:
    s = len(c.clauses)
    return [
        bound("anchors", "==", 6 * s + 4, r.anchor_count),
        bound("k", "==", 2 * s + 1, r.k),
    ]


def _ldl_checks(m: MpPTF, d: DecisionList) -> List[BoundCheck]:
    total = sum(len(f.attainable_values()) for f in (*m.left, *m.right))
    return [bound("length", "<=", total, d.length)]


def _eldl_checks(d: DecisionList, out: LabeledKStat) -> List[BoundCheck]:
    s = d.length
    return [
        bound("forms", "==", 2 * (s + 1), len(out.forms)),
        bound("k", "==", s + 2, out.k),
    ]


def _depth3_checks(r: NNRep, c: ThresholdCircuit) -> List[BoundCheck]:
    variant = CircuitVariant(c.notes.get("construction", CircuitVariant.OR_AND.value))
    expected = circuits.depth3_size(len(r.positive), len(r.negative), variant)
    return [bound("gates", "==", expected, c.size)]


def _slice_checks(r: NNRep, c: ThresholdCircuit) -> List[BoundCheck]:
    dim = r.dimension
    return [bound("gates", "<=", (dim + 1) * r.anchor_count + (dim + 1) * len(r.positive) + 1, c.size)]


def _depth2_checks(r: NNRep, c: ThresholdCircuit) -> List[BoundCheck]:
    return [
        bound("first_layer", "==", 2 * r.dimension * r.anchor_count, c.first_layer_size()),
        bound("depth", "==", 2, c.depth),
    ]


def _default_passes() -> List[ConversionPass]:
    NN, KNN, MP, KS, LKS = (
        ModelKind.NN, ModelKind.KNN, ModelKind.MPPTF, ModelKind.KSTAT, ModelKind.LABELED_KSTAT
    )
    return [
        ConversionPass("nn-to-mpptf", "Distance forms of every anchor", NN, MP,
                       nn_mpptf.nn_to_mpptf, _nn_mpptf_checks, _nn_mpptf_notes),
        ConversionPass("mpptf-to-hnn", "Boolean anchors by block construction", MP, NN,
                       nn_mpptf.mpptf_to_hnn, _hnn_checks, _hnn_notes),
        ConversionPass("mpptf-to-nn", "Rational anchors with four-square constants", MP, NN,
                       nn_mpptf.mpptf_to_nn, _rational_nn_checks),
        ConversionPass("mpptf-to-kstat", "mpPTF as first order statistics", MP, KS,
                       nn_mpptf.mpptf_to_kstat, _equal_k_checks),
        ConversionPass("knn-to-mpptf", "One summed form per k-subset of anchors", KNN, MP,
                       knn.knn_to_mpptf, _knn_mpptf_checks, _knn_mpptf_notes),
        ConversionPass("knn-to-kstat", "Positive and negative distance statistics", KNN, KS,
                       knn.knn_to_kstat, _equal_k_checks),
        ConversionPass("kstat-to-knn", "Rational anchors with k = 2t - 1", KS, KNN,
                       knn.kstat_to_knn, _kstat_knn_checks),
        ConversionPass("kstat-to-kstat", "Equalise the statistic indices", KS, KS,
                       kstat.kstat_equalize, _equal_k_checks),
        ConversionPass("kstat-to-labeled_kstat", "Two-sided to labeled single list", KS, LKS,
                       kstat.twosided_to_labeled, _labeled_checks),
        ConversionPass("labeled_kstat-to-kstat", "Labeled single list to two-sided", LKS, KS,
                       kstat.labeled_to_twosided, _twosided_checks, _twosided_notes),
        ConversionPass("mpptf-to-ldl", "Linear decision list over attainable values", MP, ModelKind.LDL,
                       ldl.mpptf_to_ldl, _ldl_checks),
        ConversionPass("eldl-to-labeled_kstat", "Exact decision list as a labeled statistic",
                       ModelKind.ELDL, LKS, ldl.eldl_to_kstat, _eldl_checks),
        ConversionPass("sym_maj-to-labeled_kstat", "Threshold gates under a symmetric top gate",
                       ModelKind.SYM_MAJ, LKS, symmetric.sym_maj_to_kstat, _sym_maj_checks),
        ConversionPass("sym_and-to-knn", "Conjunctions under a symmetric top gate",
                       ModelKind.SYM_AND, KNN, symmetric.sym_and_to_knn, _sym_and_checks),
        ConversionPass("hnn-to-depth3", "Pairwise comparators under OR/AND", NN, ModelKind.CIRCUIT,
                       circuits.hnn_to_depth3, _depth3_checks),
        ConversionPass("hnn-to-slice", "Distance slices under OR/AND", NN, ModelKind.CIRCUIT,
                       lambda r, **_: circuits.hnn_to_depth3_slice(r), _slice_checks),
        ConversionPass("hnn-to-depth2", "Single threshold gate over distance levels", NN, ModelKind.CIRCUIT,
                       lambda r, **_: circuits.hnn_to_depth2(r), _depth2_checks),
    ]


_REGISTRY: Dict[str, BasePass] = {p.name: p for p in _default_passes()}

# Aliases for the operation names
_ALIASES = {
    "kstat-equalize": "kstat-to-kstat",
    "twosided-to-labeled": "kstat-to-labeled_kstat",
    "labeled-to-twosided": "labeled_kstat-to-kstat",
    "eldl-to-kstat": "eldl-to-labeled_kstat",
}


def register_pass(p: BasePass) -> None:
    """Add a pass under its name"""
    if p.name in _REGISTRY:
        raise ValueError(f"Pass {p.name} already exists")
    _REGISTRY[p.name] = p


def unregister_pass(name: str) -> None:
    """Remove a pass by name"""
    if name in _REGISTRY:
        del _REGISTRY[name]


def get_pass(name: str) -> BasePass:
    key = _ALIASES.get(name, name)
    if key not in _REGISTRY:
        raise ValueError(f"Unknown pass {name}; available: {', '.join(available_passes())}")
    return _REGISTRY[key]


def available_passes() -> List[str]:
    return sorted(_REGISTRY)


__all__ = [
    'ConversionPass',
    'register_pass',
    'unregister_pass',
    'get_pass',
    'available_passes',
]
