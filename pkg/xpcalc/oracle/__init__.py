from oracle.phase_oracle import (
    PhaseFn,
    phase_of_product,
    check_logical,
    same_phase_function,
    DEFAULT_ORACLE_CAP,
)
from oracle.dense_state import (
    DenseState,
    apply_unitary,
    apply_x,
    project,
    basis_bits,
    basis_index,
    DEFAULT_DENSE_CAP,
)

__all__ = [
    'PhaseFn', 'phase_of_product', 'check_logical', 'same_phase_function', 'DEFAULT_ORACLE_CAP',
    'DenseState', 'apply_unitary', 'apply_x', 'project', 'basis_bits', 'basis_index', 'DEFAULT_DENSE_CAP',
]
