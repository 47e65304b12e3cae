"""
xpcalc - Result Models
Containers returned by the algorithm engines. Each one knows how to turn itself into a dictionary
for the JSON reports, the engines never format output themselves.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np

from models.css_code import CssCode, bits_to_string
from models.operators import DiagProduct, XpOp
from models.zn_matrix import ZnMatrix, format_residues


@dataclass(frozen=True)
class NotFound:
    """No operator with the requested property exists (a normal outcome, not an error)"""
    reason: str = ""

    def to_dict(self) -> dict:
        return {"found": False, "reason": self.reason}


@dataclass(frozen=True)
class BudgetExhausted:
    """A search stopped after visiting its node budget without an answer"""
    nodes: int

    def to_dict(self) -> dict:
        return {"found": False, "budget_exhausted": True, "nodes": self.nodes}


@dataclass(frozen=True)
class CodeDistances:
    """X and Z distances, None where the brute-force cap was hit"""
    dX: Optional[int]
    dZ: Optional[int]

    def to_dict(self) -> dict:
        return {"dX": self.dX, "dZ": self.dZ}


@dataclass(frozen=True, eq=False)
class IdentityGenerators:
    """Z-components of the diagonal logical identity generators at precision N"""
    N: int
    K_M: ZnMatrix

    def to_dict(self) -> dict:
        return {"N": self.N, "K_M": self.K_M.to_strings()}


@dataclass(frozen=True)
class GeneratorRow:
    """One row of K_L with its logical action and Clifford level"""
    z: Tuple[int, ...]
    level: int
    action: DiagProduct

    @property
    def is_identity(self) -> bool:
        return self.action.is_identity()


@dataclass(frozen=True, eq=False)
class LogicalGenerators:
    """
    Z-components of the diagonal logical operator generators at precision N

        N: precision
        K_L: Howell basis of all logical z-components (identities included)
        rows: one annotation per K_L row, non-trivial actions first, identities last
    """
    N: int
    K_L: ZnMatrix
    rows: List[GeneratorRow] = field(default_factory=list)

    def actions(self) -> List[DiagProduct]:
        return [row.action for row in self.rows if not row.is_identity]


@dataclass(frozen=True, eq=False)
class Embedding:
    """
    Embedding matrix V: each row is the support of one embedded qubit

        V: binary |V| x n matrix, rows distinct and nonzero
    """
    V: np.ndarray

    def __post_init__(self):
        matrix = np.atleast_2d(np.asarray(self.V, dtype=np.int64)) % 2
        matrix.setflags(write=False)
        object.__setattr__(self, "V", matrix)

    @property
    def size(self) -> int:
        return self.V.shape[0]

    @property
    def n(self) -> int:
        return self.V.shape[1]

    def rows_as_tuples(self) -> List[Tuple[int, ...]]:
        return [tuple(int(bit) for bit in row) for row in self.V]

    def is_downward_closed(self) -> bool:
        """True when every nonzero u below a row v (u <= v bitwise) is also a row"""
        rows = set(self.rows_as_tuples())
        for v in rows:
            support = [i for i, bit in enumerate(v) if bit]
            for mask in range(1, 1 << len(support)):
                u = [0] * len(v)
                for j, i in enumerate(support):
                    if mask >> j & 1:
                        u[i] = 1
                if tuple(u) not in rows:
                    return False
        return True

    def to_dict(self) -> dict:
        return {"V": [bits_to_string(row) for row in self.V]}


@dataclass(frozen=True)
class PartitionState:
    """
    Todo vector of the depth-one search, one entry per row of V:
    0 = excluded, 1 = undetermined, 2 = included (included rows never overlap)
    """
    a: Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class DepthOneResult:
    """A depth-one implementation over V with its action and the operator on the original qubits"""
    z: Tuple[int, ...]
    N: int
    embedding: Embedding
    action: DiagProduct
    level: int
    gates: DiagProduct
    nodes: int

    def to_dict(self) -> dict:
        return {
            "found": True,
            "z": format_residues(self.z, self.N),
            "N": self.N,
            "level": self.level,
            "nodes": self.nodes,
        }


@dataclass(frozen=True, eq=False)
class CanonicalImplementation:
    """
    Bounded-support implementation of a logical diagonal operator on a code

        target: the logical operator, a CP product on k qubits
        rp_terms: RP product on the n physical qubits
        cp_terms: CP expansion of rp_terms, when computed
        max_support: largest term support
    """
    target: DiagProduct
    rp_terms: DiagProduct
    cp_terms: Optional[DiagProduct]
    max_support: int


@dataclass(frozen=True, eq=False)
class ConstructionResult:
    """
    Output of the code construction pipeline

        code: the embedded code
        base_code: the toric code it was built from
        embedding: rows of V kept after dropping zero coefficients
        exponents: per embedded qubit, the exponent a_j of the phase gate P^a_j (zeros omitted)
        N: precision of the exponents
        global_phase: phase divided out of the target before construction
        drop_policy: "level" when only top-level terms were kept, "all" otherwise
        exact: True when the assignment was verified to implement the target exactly
    """
    code: CssCode
    base_code: CssCode
    embedding: Embedding
    exponents: Dict[int, int]
    N: int
    global_phase: int
    drop_policy: str
    exact: bool


@dataclass(frozen=True)
class TableRow:
    """One cell of the construction table with the published reference values"""
    target: str
    d: int
    n: int
    dX: Optional[int]
    dZ: Optional[int]
    exact: bool
    reference: Optional[Tuple[int, int, int]]

    @property
    def matches(self) -> Optional[bool]:
        """None when there is no reference or a needed distance was not computed"""
        if self.reference is None:
            return None
        ref_n, ref_dx, ref_dz = self.reference
        if self.n != ref_n:
            return False
        if self.dX is None or self.dZ is None:
            return None
        return (self.dX, self.dZ) == (ref_dx, ref_dz)

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "d": self.d,
            "n": self.n,
            "dX": self.dX,
            "dZ": self.dZ,
            "exact": self.exact,
            "reference": list(self.reference) if self.reference else None,
            "matches": self.matches,
        }


class CheckOutcome(Enum):
    """Classification of a diagonal operator by the brute-force oracle"""
    IDENTITY = "identity"
    LOGICAL = "logical"
    NOT_LOGICAL = "not_logical"


@dataclass(frozen=True, eq=False)
class CheckResult:
    """
    Oracle verdict

        outcome: CheckOutcome
        action: logical action for IDENTITY / LOGICAL (identity product for IDENTITY)
        witness: for NOT_LOGICAL, two basis strings of the same logical state whose phases differ
    """
    outcome: CheckOutcome
    action: Optional[DiagProduct] = None
    witness: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None

    @property
    def is_logical(self) -> bool:
        return self.outcome != CheckOutcome.NOT_LOGICAL

    def to_dict(self) -> dict:
        result = {"outcome": self.outcome.value}
        if self.witness is not None:
            result["witness"] = [bits_to_string(e) for e in self.witness]
        return result


@dataclass(frozen=True, eq=False)
class CssReduction:
    """
    Non-CSS code C written as C = D Q C'

        css_code: C', the CSS code
        q: bit vector of Q = XP_2(0|q|0)
        D: level-2 diagonal product (S, Z, CZ terms) at precision 2
    """
    css_code: CssCode
    q: Tuple[int, ...]
    D: DiagProduct

    def to_dict(self) -> dict:
        return {
            "code": self.css_code.to_dict(),
            "q": bits_to_string(self.q),
            "D": self.D.to_dict(),
        }


@dataclass(frozen=True)
class CommutatorCheck:
    """
    Intermediate values of the logical operator test for one X-check x

        x: the X-check
        xz: x.z mod N, must vanish
        commutator_z: -2xz mod N, the Z-component of the group commutator
        in_span: whether commutator_z lies in the span of the logical identities
    """
    x: Tuple[int, ...]
    xz: int
    commutator_z: Tuple[int, ...]
    N: int
    in_span: bool

    @property
    def passes(self) -> bool:
        return self.xz == 0 and self.in_span

    def to_dict(self) -> dict:
        return {
            "x": bits_to_string(self.x),
            "xz": self.xz,
            "commutator_z": format_residues(self.commutator_z, self.N),
            "in_span": self.in_span,
        }


@dataclass(frozen=True, eq=False)
class CanonicalGenerators:
    """
    Stabiliser generators of a Pauli code split by symplectic elimination

        sx: generators with a nonzero X part, X parts in reduced row echelon form
        sz: diagonal generators (signed Z strings), Z parts in reduced row echelon form
        lx: X-logicals commuting with every generator and with each other
    """
    sx: List[XpOp]
    sz: List[XpOp]
    lx: List[XpOp]

    @property
    def n(self) -> int:
        return (self.sx + self.sz + self.lx)[0].n

    def to_dict(self) -> dict:
        return {
            "sx": [op.to_string() for op in self.sx],
            "sz": [op.to_string() for op in self.sz],
            "lx": [op.to_string() for op in self.lx],
        }
