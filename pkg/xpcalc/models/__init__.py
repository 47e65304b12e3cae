from models.errors import (
    XpCalcError,
    DimensionError,
    CodeFormatError,
    GateSyntaxError,
    IndependenceError,
    NotLogicalError,
    CapExceededError,
    CommutationError,
    PhaseFitError,
)
from models.zn_matrix import ZnMatrix, format_residues, parse_residues
from models.css_code import CssCode, CodewordIndex, bits_to_string
from models.operators import XpOp, CpOp, RpOp, DiagProduct, GateKind, indicator, support_of
from models.pauli_code import PauliStabCode, parse_pauli, format_pauli
from models.results import (
    NotFound,
    BudgetExhausted,
    CodeDistances,
    IdentityGenerators,
    GeneratorRow,
    LogicalGenerators,
    Embedding,
    PartitionState,
    DepthOneResult,
    CanonicalImplementation,
    ConstructionResult,
    TableRow,
    CheckOutcome,
    CheckResult,
    CssReduction,
    CommutatorCheck,
    CanonicalGenerators,
)

__all__ = [
    'XpCalcError', 'DimensionError', 'CodeFormatError', 'GateSyntaxError', 'IndependenceError',
    'NotLogicalError', 'CapExceededError', 'CommutationError', 'PhaseFitError',
    'ZnMatrix', 'format_residues', 'parse_residues',
    'CssCode', 'CodewordIndex', 'bits_to_string',
    'XpOp', 'CpOp', 'RpOp', 'DiagProduct', 'GateKind', 'indicator', 'support_of',
    'PauliStabCode', 'parse_pauli', 'format_pauli',
    'NotFound', 'BudgetExhausted', 'CodeDistances', 'IdentityGenerators', 'GeneratorRow',
    'LogicalGenerators', 'Embedding', 'PartitionState', 'DepthOneResult', 'CanonicalImplementation',
    'ConstructionResult', 'TableRow', 'CheckOutcome', 'CheckResult', 'CssReduction', 'CommutatorCheck',
    'CanonicalGenerators',
]
