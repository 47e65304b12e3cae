import numpy as np
import pytest

from embed import EmbeddingEngine
from logic import LogicEngine
from models import (
    BudgetExhausted,
    CodeFormatError,
    DepthOneResult,
    DimensionError,
    GateKind,
    IndependenceError,
    NotFound,
    PartitionState,
    XpOp,
    ZnMatrix,
)
from oracle import check_logical, phase_of_product, same_phase_function
from phaseops import format_gates, parse_gates, to_cp


@pytest.fixture
def m32():
    """Every support of weight 1 or 2 on three qubits"""
    return EmbeddingEngine.weight_vectors(3, 2)


# ============================================================================
# Embeddings
# ============================================================================

def test_weight_vectors(m32):
    assert m32.size == 6
    assert m32.rows_as_tuples() == [
        (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1),
    ]
    assert m32.is_downward_closed()
    assert EmbeddingEngine.weight_vectors(2, 5).size == 3


def test_parse_cycles():
    embedding = EmbeddingEngine.parse_cycles("(0,3)(1, 2)", 4)
    assert embedding.rows_as_tuples() == [(1, 0, 0, 1), (0, 1, 1, 0)]
    assert not embedding.is_downward_closed()
    assert EmbeddingEngine.parse_cycles("(0 1)(2)", 3).size == 2


@pytest.mark.parametrize("text", ["(0,3)(1)", "(0,1)(1,2,3)", "(0,5)(1,2,3,4)", "0,1,2,3", "(0,1)x(2,3)", "()(0,1,2,3)"])
def test_parse_cycles_rejects(text):
    with pytest.raises(CodeFormatError):
        EmbeddingEngine.parse_cycles(text, 4)


def test_embedded_repetition_code(repetition, m32):
    embedded = EmbeddingEngine.embed_code(repetition, m32)
    assert embedded.SX.tolist() == [[1, 1, 0, 0, 1, 1], [0, 1, 1, 1, 1, 0]]
    assert embedded.LX.tolist() == [[0, 0, 1, 0, 1, 1]]


def test_embedding_that_merges_logicals_is_rejected(code_422):
    with pytest.raises(IndependenceError):
        EmbeddingEngine.embed_code(code_422, EmbeddingEngine.parse_cycles("(0,3)(1,2)", 4))


def test_embedding_size_must_match(code_422, m32):
    with pytest.raises(DimensionError):
        EmbeddingEngine.embed_code(code_422, m32)


def test_embedded_s_on_repetition_code(repetition, m32):
    embedded = EmbeddingEngine.embed_code(repetition, m32)
    z = [1, 1, 3, 1, 3, 3]
    assert LogicEngine.logical_action(embedded, z, 4) == parse_gates("S[0]", 4, 1)

    gates = EmbeddingEngine.interpret_embedded(z, 4, m32)
    assert gates.kind == GateKind.RP
    assert check_logical(repetition, phase_of_product(gates)).action == parse_gates("S[0]", 4, 1)

    as_cp = EmbeddingEngine.interpret_embedded(z, 4, m32, as_cp=True)
    assert as_cp.kind == GateKind.CP
    assert same_phase_function(phase_of_product(as_cp), phase_of_product(to_cp(gates)))


def test_interpret_embedded_needs_downward_closed_for_cp(code_422):
    cycles = EmbeddingEngine.parse_cycles("(0,3)(1,2)", 4)
    assert EmbeddingEngine.interpret_embedded([1, 0], 4, cycles).terms
    with pytest.raises(DimensionError):
        EmbeddingEngine.interpret_embedded([1, 0], 4, cycles, as_cp=True)
    with pytest.raises(DimensionError):
        EmbeddingEngine.interpret_embedded([1, 0, 0], 4, cycles)


def test_embed_op(m32):
    op = EmbeddingEngine.embed_op(1, [1, 1, 0], [1, 0, 0, 0, 0, 0], m32, 4)
    assert op == XpOp(4, 1, [1, 1, 0, 0, 1, 1], [1, 0, 0, 0, 0, 0])
    with pytest.raises(DimensionError):
        EmbeddingEngine.embed_op(0, [1, 1], [0] * 6, m32, 4)
    with pytest.raises(DimensionError):
        EmbeddingEngine.embed_op(0, [1, 1, 0], [0] * 5, m32, 4)


def test_embedding_is_a_homomorphism_on_phases(m32):
    # the diagonal image of prod_v RP_N(2 q_v, v) has the same phase on |e V^T> as the product on |e>
    q = [1, 2, 3, 0, 1, 2]
    product = EmbeddingEngine.interpret_embedded(q, 4, m32)
    image = EmbeddingEngine.embed_op(0, [0, 0, 0], q, m32, 4)
    for e in np.ndindex(2, 2, 2):
        embedded_e = (np.array(e) @ m32.V.T) % 2
        assert phase_of_product(product)(e) == (2 * int(embedded_e @ image.z)) % 8


# ============================================================================
# Depth-one search
# ============================================================================

def test_depth_one_on_422(code_422):
    result = EmbeddingEngine.depth_one_search(code_422, 2)
    assert isinstance(result, DepthOneResult)
    assert result.level == 2
    assert result.nodes >= 1

    rows = result.embedding.V[np.flatnonzero(np.array(result.z))]
    overlaps = rows @ rows.T
    assert not (overlaps - np.diag(np.diag(overlaps))).any()

    oracle = check_logical(code_422, phase_of_product(result.gates))
    assert oracle.is_logical
    assert oracle.action == result.action


def test_depth_one_same_action(code_422):
    result = EmbeddingEngine.depth_one_search(code_422, 2, same_action=True)
    assert isinstance(result, (DepthOneResult, NotFound))
    if isinstance(result, DepthOneResult):
        assert check_logical(code_422, phase_of_product(result.gates)).action == result.action


def test_depth_one_budget(code_422):
    result = EmbeddingEngine.depth_one_search(code_422, 2, budget=1)
    assert isinstance(result, BudgetExhausted)
    assert result.to_dict()["budget_exhausted"]


def test_depth_one_with_dependent_embedding(code_422):
    cycles = EmbeddingEngine.parse_cycles("(0,3)(1,2)", 4)
    result = EmbeddingEngine.depth_one_search(code_422, 2, cycles)
    assert isinstance(result, NotFound)
    assert "logical" in result.reason


# ============================================================================
# Partition search
# ============================================================================

def test_partition_search_finds_disjoint_rows(m32):
    overlaps = (m32.V @ m32.V.T) > 0
    z = np.array([1, 0, 0, 0, 0, 1])
    found = list(EmbeddingEngine._partition_search(ZnMatrix.empty(4, 6), z, overlaps, 100))
    assert [(candidate.tolist(), nodes, exhausted) for candidate, nodes, exhausted in found[:-1]] == [
        ([1, 0, 0, 0, 0, 1], 5, False),
    ]
    assert found[-1] == (None, 5, False)


def test_partition_search_rejects_overlapping_rows(m32):
    overlaps = (m32.V @ m32.V.T) > 0
    z = np.array([1, 0, 0, 1, 0, 0])
    assert list(EmbeddingEngine._partition_search(ZnMatrix.empty(4, 6), z, overlaps, 100)) == [(None, 3, False)]
    assert list(EmbeddingEngine._partition_search(ZnMatrix.empty(4, 6), z, overlaps, 1)) == [(None, 1, True)]


def test_partition_state_is_a_value():
    assert PartitionState((1, 1, 2)) == PartitionState((1, 1, 2))
    assert len({PartitionState((0, 1)), PartitionState((0, 1)), PartitionState((2, 1))}) == 2


# ============================================================================
# 2D toric code
# ============================================================================

def test_toric_s_s3_is_depth_one(toric_22):
    # qubit pairs {0,2} and {4,5} carry the parities v0 and v1 on every codeword string
    embedding = EmbeddingEngine.weight_vectors(8, 2)
    rows = embedding.rows_as_tuples()
    z = np.zeros(embedding.size, dtype=np.int64)
    z[rows.index((1, 0, 1, 0, 0, 0, 0, 0))] = 1
    z[rows.index((0, 0, 0, 0, 1, 1, 0, 0))] = 3

    embedded = EmbeddingEngine.embed_code(toric_22, embedding)
    assert LogicEngine.is_logical(embedded, z, 4)
    target = parse_gates("S[0] S3[1]", 4, 2)
    assert LogicEngine.logical_action(embedded, z, 4) == target

    gates = EmbeddingEngine.interpret_embedded(z, 4, embedding, as_cp=True)
    assert format_gates(gates) == "S[0] S[2] S3[4] S3[5] CZ[0,2] CZ[4,5]"
    assert check_logical(toric_22, phase_of_product(gates)).action == target


def test_depth_one_on_toric_code(toric_22):
    result = EmbeddingEngine.depth_one_search(toric_22, 2)
    assert isinstance(result, DepthOneResult)
    assert result.level == 2
    assert format_gates(result.action) == "S[0]"

    rows = result.embedding.V[np.flatnonzero(np.array(result.z))]
    overlaps = rows @ rows.T
    assert not (overlaps - np.diag(np.diag(overlaps))).any()
    assert check_logical(toric_22, phase_of_product(result.gates)).action == result.action
