"""
xpcalc - Embedding Engine
Embedded codes and the depth-one search.

An embedding V (one row per embedded qubit, each row a support on the original n qubits) sends the
basis state |e> to |e V^T>. A phase-rotation gate RP_N(2q, v) on the original code then acts as the
single-qubit gate P^q on the embedded qubit of row v, so products of phase-rotation gates become
diagonal XP operators on the embedded code, where the logic engine can search for them.
"""

import logging
import re
from itertools import combinations
from typing import List, Optional, Sequence, Union

import numpy as np

from codes import build_code
from logic import LogicEngine, precision
from models import (
    BudgetExhausted,
    CodeFormatError,
    CssCode,
    DepthOneResult,
    DiagProduct,
    DimensionError,
    Embedding,
    GateKind,
    IndependenceError,
    NotFound,
    PartitionState,
    RpOp,
    XpOp,
    ZnMatrix,
)
from phaseops import product_level, to_cp
from ringalg import residue

logger = logging.getLogger(__name__)

DEFAULT_DFS_BUDGET = 1_000_000

CYCLE = re.compile(r"\(([^()]*)\)")

# PartitionState entries
EXCLUDED, UNDECIDED, INCLUDED = 0, 1, 2


class EmbeddingEngine:
    """
    Embedding operator, embedded codes and the depth-one search
    """

    @staticmethod
    def weight_vectors(n: int, t: int) -> Embedding:
        """
        All binary vectors of length n with weight 1..t, ordered by weight and then by support

        Returns:
            Embedding with sum_{1 <= j <= t} C(n, j) rows
        """
        if t < 1:
            raise DimensionError(f"Embedding weight must be at least 1, got {t}")
        rows = []
        for weight in range(1, min(t, n) + 1):
            for support in combinations(range(n), weight):
                row = np.zeros(n, dtype=np.int64)
                row[list(support)] = 1
                rows.append(row)
        return Embedding(np.array(rows, dtype=np.int64))

    @staticmethod
    def parse_cycles(text: str, n: int) -> Embedding:
        """
        Embedding from a qubit permutation in cycle form, e.g. "(0,3)(1,2)(4)":
        one row per cycle, the indicator of the qubits it moves.
        Every qubit must appear in exactly one cycle, fixed points included.
        """
        cleaned = text.strip()
        cycles = CYCLE.findall(cleaned)
        if not cycles or CYCLE.sub("", cleaned).strip():
            raise CodeFormatError(f"Not a cycle string: '{text}'")
        seen = set()
        rows = []
        for cycle in cycles:
            try:
                members = [int(part) for part in re.split(r"[,\s]+", cycle.strip()) if part]
            except ValueError as err:
                raise CodeFormatError(f"Bad cycle '({cycle})'") from err
            if not members:
                raise CodeFormatError("Empty cycle '()'")
            for i in members:
                if not 0 <= i < n:
                    raise CodeFormatError(f"Qubit {i} out of range for {n} qubits")
                if i in seen:
                    raise CodeFormatError(f"Qubit {i} appears in more than one cycle")
                seen.add(i)
            row = np.zeros(n, dtype=np.int64)
            row[members] = 1
            rows.append(row)
        missing = sorted(set(range(n)) - seen)
        if missing:
            raise CodeFormatError(f"Cycles must cover every qubit, missing {missing}")
        return Embedding(np.array(rows, dtype=np.int64))

    @staticmethod
    def embed_code(code: CssCode, embedding: Embedding) -> CssCode:
        """
        SX' = SX V^T and LX' = LX V^T (mod 2), SZ' derived.
        Dependent X-checks of the embedded code are dropped; a dependent X-logical is an error.
        """
        if embedding.n != code.n:
            raise DimensionError(f"Embedding is over {embedding.n} qubits, code has {code.n}")
        SX = (code.SX @ embedding.V.T) % 2
        LX = (code.LX @ embedding.V.T) % 2
        embedded = build_code(SX.reshape(-1, embedding.size), LX.reshape(-1, embedding.size), drop_dependent=True)
        logger.info("Embedded %r into %d qubits: %r", code, embedding.size, embedded)
        return embedded

    @staticmethod
    def embed_op(p: int, x: Sequence[int], q: Sequence[int], embedding: Embedding, N: int) -> XpOp:
        """
        Image of w^p X^x prod_v RP_N(2 q_v, v) under the embedding: XP_N(p | x V^T | q)
        """
        x_bits = np.asarray(x, dtype=np.int64) % 2
        q_vec = np.asarray(q, dtype=np.int64)
        if len(x_bits) != embedding.n:
            raise DimensionError(f"x has length {len(x_bits)}, embedding is over {embedding.n} qubits")
        if len(q_vec) != embedding.size:
            raise DimensionError(f"q has length {len(q_vec)}, embedding has {embedding.size} rows")
        return XpOp(N, p, (x_bits @ embedding.V.T) % 2, q_vec)

    @staticmethod
    def interpret_embedded(z: Sequence[int], N: int, embedding: Embedding, as_cp: bool = False) -> DiagProduct:
        """
        Operator on the original qubits whose embedded image is XP_N(0|0|z): prod_v RP_N(2 z[v], v),
        rewritten as CP gates when as_cp is set (V must then be downward closed)
        """
        vector = np.asarray(z, dtype=np.int64) % N
        if len(vector) != embedding.size:
            raise DimensionError(f"z has length {len(vector)}, embedding has {embedding.size} rows")
        terms = tuple(
            RpOp(N, 2 * int(value), row)
            for value, row in zip(vector, embedding.rows_as_tuples())
            if value
        )
        product = DiagProduct(N, embedding.n, GateKind.RP, terms)
        if not as_cp:
            return product
        if not embedding.is_downward_closed():
            raise DimensionError("CP form needs an embedding closed under taking subsets of rows")
        return to_cp(product)

    @staticmethod
    def _partition_search(reducer: ZnMatrix, z: np.ndarray, overlaps: np.ndarray, budget: int):
        """
        Depth-first search over PartitionState vectors for a residue of z whose nonzero entries
        sit on pairwise disjoint rows of V.

        Yields (candidate, nodes, False) for every depth-one residue found, and finally
        (None, nodes, exhausted) when the todo stack is empty or the budget is used up.
        """
        size = len(z)
        todo: List[PartitionState] = [PartitionState((UNDECIDED,) * size)]
        nodes = 0
        while todo:
            if nodes >= budget:
                yield None, nodes, True
                return
            a = np.array(todo.pop().a, dtype=np.int64)
            nodes += 1
            order = np.concatenate([
                np.flatnonzero(a == EXCLUDED),
                np.flatnonzero(a == UNDECIDED),
                np.flatnonzero(a == INCLUDED),
            ])
            reduced = residue(reducer.permute_columns(order), z[order])
            candidate = np.zeros(size, dtype=np.int64)
            candidate[order] = reduced
            if (candidate[a == EXCLUDED] != 0).any():
                continue
            open_rows = np.flatnonzero((candidate != 0) & (a == UNDECIDED))
            if not open_rows.size:
                yield candidate, nodes, False
                continue
            v = int(open_rows[0])
            included = a.copy()
            included[overlaps[v]] = EXCLUDED
            included[v] = INCLUDED
            excluded = a.copy()
            excluded[v] = EXCLUDED
            todo.append(PartitionState(tuple(int(entry) for entry in included)))
            todo.append(PartitionState(tuple(int(entry) for entry in excluded)))
        yield None, nodes, False

    @staticmethod
    def depth_one_search(code: CssCode, t: int, embedding: Optional[Embedding] = None,
                         budget: int = DEFAULT_DFS_BUDGET,
                         same_action: bool = False) -> Union[DepthOneResult, NotFound, BudgetExhausted]:
        """
        Look for a logical operator at level t built from gates on pairwise disjoint supports.

        The code is embedded with V (all weight 1..t supports by default). Each generator of the
        embedded logical group at level t is reduced against the other generators, exploring which
        rows of V may carry a gate. With same_action the reduction uses the logical identities
        instead, so the action of the generator is kept exactly.

        Returns:
            DepthOneResult, NotFound after exhausting every configuration, or BudgetExhausted
        """
        N = precision(t)
        if embedding is None:
            embedding = EmbeddingEngine.weight_vectors(code.n, t)
        try:
            embedded = EmbeddingEngine.embed_code(code, embedding)
        except IndependenceError as err:
            return NotFound(f"Embedding does not keep the logical qubits apart: {err}")
        generators = LogicEngine.logical_generators(embedded, t)
        candidates = [index for index, row in enumerate(generators.rows) if row.level == t]
        if not candidates:
            return NotFound(f"No logical operator at level {t} on the embedded code")

        V = embedding.V
        overlaps = (V @ V.T) > 0
        identities = LogicEngine.logical_identities(embedded, t).K_M if same_action else None
        all_rows = np.array([row.z for row in generators.rows], dtype=np.int64)
        remaining = budget
        total_nodes = 0
        for index in candidates:
            z = all_rows[index]
            if same_action:
                reducer = identities
            else:
                others = np.delete(all_rows, index, axis=0)
                reducer = ZnMatrix(N, others, embedding.size) if len(others) else ZnMatrix.empty(N, embedding.size)
            logger.debug("Depth-one search from generator %d with budget %d", index, remaining)
            used = 0
            for candidate, nodes, exhausted in EmbeddingEngine._partition_search(reducer, z, overlaps, remaining):
                used = nodes
                if exhausted:
                    logger.warning("Depth-one search budget of %d nodes exhausted", budget)
                    return BudgetExhausted(total_nodes + nodes)
                if candidate is None:
                    break
                action = LogicEngine.logical_action(embedded, candidate, N)
                level = product_level(action)
                if level != t:
                    continue
                gates = EmbeddingEngine.interpret_embedded(candidate, N, embedding, as_cp=embedding.is_downward_closed())
                logger.info("Depth-one operator found after %d nodes", total_nodes + nodes)
                return DepthOneResult(
                    z=tuple(int(value) for value in candidate),
                    N=N,
                    embedding=embedding,
                    action=action,
                    level=level,
                    gates=gates,
                    nodes=total_nodes + nodes,
                )
            total_nodes += used
            remaining -= used
        return NotFound(f"No depth-one logical operator at level {t}")
