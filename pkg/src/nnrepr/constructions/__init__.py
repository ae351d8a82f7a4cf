"""Named gadget builders"""

from .catalog import construct, normalise_family, presets
from .gadgets import cnf_to_nn, disj_hnn, dnf_clause_anchor, many_component_cnf, omb_and2_mpptf, xor_mpptf

__all__ = [
    'cnf_to_nn',
    'dnf_clause_anchor',
    'disj_hnn',
    'xor_mpptf',
    'omb_and2_mpptf',
    'many_component_cnf',
    'construct',
    'presets',
    'normalise_family',
]
