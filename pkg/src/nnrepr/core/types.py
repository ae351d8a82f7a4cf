from enum import Enum, IntEnum


class Output(IntEnum):
    """Value of a representation at a Boolean point"""
    ZERO = 0
    ONE = 1
    UNDEFINED = 2  # cross-label tie, no strictly separated winner


class ModelKind(Enum):
    """Enumeration of representation models (the JSON "model" tag)"""
    NN = "nn"
    KNN = "knn"
    MPPTF = "mpptf"
    KSTAT = "kstat"
    LABELED_KSTAT = "labeled_kstat"
    LDL = "ldl"
    ELDL = "eldl"
    CIRCUIT = "circuit"
    BOOLFN = "boolfn"
    CNF = "cnf"
    SYM_MAJ = "sym_maj"
    SYM_AND = "sym_and"


class EquivStatus(Enum):
    """Outcome of an exhaustive equivalence check"""
    EQUAL = "EQUAL"
    MISMATCH = "MISMATCH"
    ILL_DEFINED = "ILL_DEFINED"


class ClauseKind(Enum):
    """Top connective of a two-level formula"""
    CNF = "CNF"
    DNF = "DNF"


class FamilyName(Enum):
    """Named parametric Boolean function families"""
    MAJ = "MAJ"
    XOR = "XOR"
    IP = "IP"
    DISJ = "DISJ"
    OMB = "OMB"
    OMB_AND2 = "OMB_AND2"
    EXACT_HALF_CNF = "EXACT_HALF_CNF"
    AND_OR_AND = "AND_OR_AND"


class Comparison(Enum):
    """Gate comparison against the threshold"""
    GE = ">="
    EQ = "="


class CircuitVariant(Enum):
    """Circuit constructions for Boolean-anchor representations"""
    OR_AND = "or-and"      # OR over p of AND over q of comparators
    AND_OR = "and-or"      # AND over q of OR over p of comparators
    SLICE = "slice"
    DEPTH2 = "depth2"


class PipelineState(Enum):
    """Enumeration of possible pipeline states"""
    IDLE = "idle"
    CONVERTING = "converting"
    VERIFYING = "verifying"
    ERROR = "error"
    COMPLETED = "completed"


# Re-export common types
__all__ = [
    'Output',
    'ModelKind',
    'EquivStatus',
    'ClauseKind',
    'FamilyName',
    'Comparison',
    'CircuitVariant',
    'PipelineState',
]
