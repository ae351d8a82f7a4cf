from .cnf import CnfDnf, cnf_eval, exact_half_cnf
from .components import components
from .families import FamilySpec, family_table
from .substitution import Substitution, apply_substitution
from .truthtable import (
    BoolFn,
    all_inputs,
    family,
    from_callable,
    from_hex,
    from_truth_table,
    index_of,
    point,
    to_hex,
)

__all__ = [
    # Types
    'BoolFn',
    'FamilySpec',
    'CnfDnf',
    'Substitution',
    # Operations
    'from_truth_table',
    'from_callable',
    'family',
    'family_table',
    'cnf_eval',
    'apply_substitution',
    'components',
    'exact_half_cnf',
    # Table plumbing
    'all_inputs',
    'index_of',
    'point',
    'to_hex',
    'from_hex',
]
