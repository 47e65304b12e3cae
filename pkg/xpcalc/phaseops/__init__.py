from phaseops.calculus import (
    xp_apply,
    xp_diag_commutator,
    clifford_level,
    cp_phase,
    rp_phase,
    product_phase,
    product_level,
    cp_term_level,
    rp_to_cp,
    cp_to_rp,
    to_cp,
    to_rp,
    conjugate_cp_by_xstring,
    conjugate_rp_by_xstring,
    conjugate_product_by_xstring,
    nonzero_subsets,
)
from phaseops.gates import parse_gates, format_gates, gate_level, NAMED_GATES

__all__ = [
    'xp_apply', 'xp_diag_commutator', 'clifford_level', 'cp_phase', 'rp_phase', 'product_phase',
    'product_level', 'cp_term_level', 'rp_to_cp', 'cp_to_rp', 'to_cp', 'to_rp',
    'conjugate_cp_by_xstring', 'conjugate_rp_by_xstring', 'conjugate_product_by_xstring',
    'nonzero_subsets', 'parse_gates', 'format_gates', 'gate_level', 'NAMED_GATES',
]
