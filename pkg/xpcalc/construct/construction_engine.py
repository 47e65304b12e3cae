"""
xpcalc - Construction Engine
Canonical implementations of logical controlled-phase operators and codes built around them.

For any CSS code with Z-logicals LZ, the phase-rotation gate RP_N(q, u LZ) acts on the codespace as
the logical RP_N(q, u). Writing a logical target as RP gates and mapping each support u to u LZ gives
a physical implementation; expanding it through the CP form at precision N removes every term of
support larger than t, because their coefficients become multiples of 2N.
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from codes import code_distances, logical_z_matrix, DEFAULT_DISTANCE_CAP
from construct.toric import toric_code, toric_logical_z
from embed import EmbeddingEngine
from logic import LogicEngine, precision
from models import (
    CanonicalImplementation,
    ConstructionResult,
    CssCode,
    DiagProduct,
    DimensionError,
    Embedding,
    GateKind,
    IndependenceError,
    NotFound,
    RpOp,
    TableRow,
)
from phaseops import parse_gates, product_level, to_cp, to_rp

logger = logging.getLogger(__name__)

# (target, d) -> (n, dX, dZ) of the codes built from toric codes of distance d
REFERENCE_TABLE: Dict[Tuple[str, int], Tuple[int, int, int]] = {
    ("S[0]", 2): (1, 1, 1),
    ("S[0]", 3): (6, 3, 2),
    ("S[0]", 4): (6, 3, 2),
    ("CZ[0,1]", 2): (4, 2, 2),
    ("CZ[0,1]", 3): (15, 4, 3),
    ("CZ[0,1]", 4): (16, 4, 4),
    ("T[0]", 2): (1, 1, 1),
    ("T[0]", 3): (1, 1, 1),
    ("T[0]", 4): (14, 7, 2),
    ("CS[0,1]", 2): (12, 6, 2),
    ("CS[0,1]", 3): (33, 14, 2),
    ("CS[0,1]", 4): (64, 22, 2),
    ("CCZ[0,1,2]", 2): (8, 4, 2),
    ("CCZ[0,1,2]", 3): (63, 16, 3),
    ("CCZ[0,1,2]", 4): (64, 16, 4),
}

TABLE_TARGETS = ("S[0]", "CZ[0,1]", "T[0]", "CS[0,1]", "CCZ[0,1,2]")

LEVEL_TERM = "level"
ALL_TERMS = "all"


def target_level(target: DiagProduct) -> int:
    return max(product_level(target), 1)


def _at_precision(product: DiagProduct, N: int) -> DiagProduct:
    try:
        return product.rescale(N)
    except DimensionError as err:
        raise DimensionError(f"Operator is not representable at precision {N}: {err}") from err


def _logical_z(code: CssCode, LZ: Optional[np.ndarray]) -> np.ndarray:
    if LZ is None:
        return logical_z_matrix(code)
    LZ = np.asarray(LZ, dtype=np.int64) % 2
    if LZ.shape != (code.k, code.n):
        raise DimensionError(f"LZ must be {code.k} x {code.n}, got {LZ.shape}")
    if ((LZ @ code.LX.T) % 2 != np.eye(code.k, dtype=np.int64)).any() or ((LZ @ code.SX.T) % 2).any():
        raise DimensionError("LZ rows must be dual to LX and commute with the X-checks")
    return LZ


class ConstructionEngine:
    """
    Canonical logical operators and the code construction pipeline
    """

    @staticmethod
    def canonical_cp_op(code: CssCode, target: DiagProduct, t: int,
                        LZ: Optional[np.ndarray] = None) -> CanonicalImplementation:
        """
        Implementation of a logical CP product by gates of support at most t

        The target is rewritten as RP gates on k qubits, RP_N(q, u) becomes RP_N(q, u LZ) on the
        physical qubits, and the product goes through the CP form and back to RP form at N = 2^t.

        Returns:
            CanonicalImplementation with both the RP and the CP form
        """
        if target.n != code.k:
            raise DimensionError(f"Target acts on {target.n} qubits, code has k={code.k}")
        N = precision(t)
        LZ = _logical_z(code, LZ)
        if product_level(target) > t:
            raise DimensionError(f"Target is at level {product_level(target)}, above {t}")
        target = _at_precision(to_cp(target), N)
        logical_rp = to_rp(target)

        physical = DiagProduct(N, code.n, GateKind.RP, phase=logical_rp.phase)
        for term in logical_rp.terms:
            w = (np.array(term.v, dtype=np.int64) @ LZ) % 2
            physical = physical.compose(DiagProduct(N, code.n, GateKind.RP, (RpOp(N, term.q, w),)))

        cp_terms = to_cp(physical)
        rp_terms = to_rp(cp_terms)
        max_support = max((term.weight for term in rp_terms.terms), default=0)
        logger.debug("Canonical implementation with %d RP terms, max support %d", len(rp_terms.terms), max_support)
        return CanonicalImplementation(target, rp_terms, cp_terms, max_support)

    @staticmethod
    def canonical_phase_op(code: CssCode, i: int, t: int, LZ: Optional[np.ndarray] = None) -> CanonicalImplementation:
        """
        Logical phase gate P_i at level t (Z, S, T, ...) from RP_N(2, z_i) with z_i row i of LZ
        """
        if not 0 <= i < code.k:
            raise DimensionError(f"Logical qubit {i} out of range for k={code.k}")
        N = precision(t)
        target = DiagProduct.of(N, code.k, GateKind.CP, [(2, [i])])
        return ConstructionEngine.canonical_cp_op(code, target, t, LZ)

    @staticmethod
    def _embedding_for(rp_terms: DiagProduct, policy: str) -> Embedding:
        if policy == LEVEL_TERM:
            kept = [term for term in rp_terms.terms if term.q % 4 == 2]
        else:
            kept = list(rp_terms.terms)
        return Embedding(np.array([term.v for term in kept], dtype=np.int64).reshape(len(kept), rp_terms.n))

    @staticmethod
    def construct_code(target: DiagProduct, d: int) -> ConstructionResult:
        """
        Build a CSS code whose logical target is a product of single-qubit phase gates.

        The canonical implementation of the target on the k-dimensional toric code of distance d
        is computed; its supports become the rows of the embedding. Only the supports carrying
        level-t coefficients are kept first and the exponents are found by search on the embedded
        code; when that fails, every nonzero support is kept and the exponents are the halved RP
        coefficients.

        Returns:
            ConstructionResult, exact when the exponents were checked to implement the target
        """
        k = target.n
        t = target_level(target)
        N = precision(t)
        target = to_cp(target)
        global_phase = _at_precision(DiagProduct(target.N, k, GateKind.CP, phase=target.phase), N).phase
        target = _at_precision(DiagProduct(target.N, k, GateKind.CP, target.terms), N)
        if global_phase:
            logger.info("Global phase w^%d set aside at N=%d", global_phase, N)

        base = toric_code(k, d)
        canonical = ConstructionEngine.canonical_cp_op(base, target, t, toric_logical_z(k, d))

        for policy in (LEVEL_TERM, ALL_TERMS):
            embedding = ConstructionEngine._embedding_for(canonical.rp_terms, policy)
            if not embedding.size:
                continue
            try:
                code = EmbeddingEngine.embed_code(base, embedding)
            except IndependenceError:
                logger.info("Embedding with policy '%s' makes the X-logicals dependent", policy)
                continue
            if policy == LEVEL_TERM:
                found = LogicEngine.search_by_action(code, t, target)
                if isinstance(found, NotFound):
                    logger.info("Level-t supports alone do not carry the target, keeping all supports")
                    continue
                z = [int(value) for value in found.z]
            else:
                z = [term.q // 2 for term in canonical.rp_terms.terms]
            exact = LogicEngine.logical_action(code, z, N) == target
            exponents = {j: value % N for j, value in enumerate(z) if value % N}
            logger.info("Constructed %r for d=%d with policy '%s'", code, d, policy)
            return ConstructionResult(code, base, embedding, exponents, N, global_phase, policy, exact)
        raise DimensionError("No embedding of the canonical implementation gives a valid code")

    @staticmethod
    def construction_table(targets: Iterable[str] = TABLE_TARGETS, distances: Sequence[int] = (2, 3),
                           distance_cap: int = DEFAULT_DISTANCE_CAP) -> List[TableRow]:
        """
        Construct a code for every (target, d) pair and compare (n, dX, dZ) with REFERENCE_TABLE
        """
        rows = []
        for text in targets:
            for d in distances:
                target = parse_gates(text, 1 << 8)
                result = ConstructionEngine.construct_code(target, d)
                measured = code_distances(result.code, distance_cap)
                row = TableRow(
                    target=text,
                    d=d,
                    n=result.code.n,
                    dX=measured.dX,
                    dZ=measured.dZ,
                    exact=result.exact,
                    reference=REFERENCE_TABLE.get((text, d)),
                )
                if row.matches is False:
                    logger.warning("%s at d=%d gives n=%d dX=%s dZ=%s, reference %s",
                                   text, d, row.n, row.dX, row.dZ, row.reference)
                rows.append(row)
        return rows
