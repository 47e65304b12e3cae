import numpy as np
import pytest

from construct import ConstructionEngine, REFERENCE_TABLE, TABLE_TARGETS, toric_code, toric_logical_z
from models import DiagProduct, DimensionError, GateKind, TableRow, XpOp, bits_to_string
from oracle import PhaseFn, check_logical, phase_of_product
from phaseops import parse_gates


# ============================================================================
# Toric codes
# ============================================================================

@pytest.mark.parametrize("k, d, n", [(1, 3, 3), (2, 2, 8), (2, 3, 18), (3, 2, 24)])
def test_toric_code_size(k, d, n):
    code = toric_code(k, d)
    assert code.n == n
    assert code.k == k


@pytest.mark.parametrize("k, d", [(1, 3), (2, 2), (2, 3)])
def test_toric_logical_z(k, d):
    code = toric_code(k, d)
    LZ = toric_logical_z(k, d)
    assert LZ.shape == (k, code.n)
    assert (LZ.sum(axis=1) == d).all()
    assert (LZ.sum(axis=0) <= 1).all()
    assert ((LZ @ code.LX.T) % 2 == np.eye(k, dtype=np.int64)).all()
    assert not ((LZ @ code.SX.T) % 2).any()


def test_smallest_2d_toric_code():
    # periodic 2 x 2 lattice: 8 edges, the fourth vertex star is the sum of the others
    code = toric_code(2, 2)
    assert (code.n, code.k, code.r) == (8, 2, 3)
    assert [bits_to_string(row) for row in code.SX] == ["10101100", "01011100", "10100011"]
    assert [bits_to_string(row) for row in code.LX] == ["00110000", "00000101"]
    assert toric_logical_z(2, 2).tolist() == [[1, 0, 1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 1, 1, 0, 0]]


@pytest.mark.parametrize("k, d", [(0, 2), (2, 1)])
def test_toric_code_rejects(k, d):
    with pytest.raises(DimensionError):
        toric_code(k, d)


# ============================================================================
# Canonical implementations
# ============================================================================

def test_canonical_cz_on_2d_toric_code():
    code = toric_code(2, 2)
    target = parse_gates("CZ[0,1]", 4, 2)
    implementation = ConstructionEngine.canonical_cp_op(code, target, 2, toric_logical_z(2, 2))
    assert implementation.max_support <= 2
    assert implementation.rp_terms.N == 4
    result = check_logical(code, phase_of_product(implementation.cp_terms))
    assert result.is_logical
    assert result.action == implementation.target


def test_canonical_phase_op():
    code = toric_code(1, 3)
    implementation = ConstructionEngine.canonical_phase_op(code, 0, 2, toric_logical_z(1, 3))
    assert implementation.target == DiagProduct.of(4, 1, GateKind.CP, [(2, [0])])
    assert implementation.max_support <= 2
    result = check_logical(code, phase_of_product(implementation.cp_terms))
    assert result.action == implementation.target


def test_canonical_op_rejects_bad_input():
    code = toric_code(1, 2)
    with pytest.raises(DimensionError):
        ConstructionEngine.canonical_cp_op(code, parse_gates("T[0]", 8, 1), 2)
    with pytest.raises(DimensionError):
        ConstructionEngine.canonical_cp_op(code, parse_gates("CZ[0,1]", 4), 2)
    with pytest.raises(DimensionError):
        ConstructionEngine.canonical_phase_op(code, 1, 2)
    with pytest.raises(DimensionError):
        ConstructionEngine.canonical_cp_op(code, parse_gates("S[0]", 4, 1), 2, LZ=[[1, 0, 0]])


# ============================================================================
# Code construction
# ============================================================================

@pytest.mark.parametrize("text, d, n", [("CZ[0,1]", 2, 4), ("CS[0,1]", 2, 12), ("S[0]", 3, 6)])
def test_construct_code(text, d, n):
    target = parse_gates(text, 1 << 8)
    result = ConstructionEngine.construct_code(target, d)
    assert result.code.n == n
    assert result.code.k == target.n
    assert result.exact
    assert REFERENCE_TABLE[(text, d)][0] == n

    z = [result.exponents.get(j, 0) for j in range(result.code.n)]
    oracle = check_logical(result.code, PhaseFn.from_xp(XpOp.diagonal(result.N, z)))
    assert oracle.is_logical
    assert oracle.action == parse_gates(text, result.N, target.n)


def test_construct_code_base_is_toric():
    result = ConstructionEngine.construct_code(parse_gates("CZ[0,1]", 4), 2)
    assert result.base_code.n == 8
    assert result.embedding.size == result.code.n
    assert result.drop_policy in ("level", "all")


# ============================================================================
# Construction table
# ============================================================================

def test_table_row_matches():
    assert TableRow("CZ[0,1]", 2, 4, 2, 2, True, (4, 2, 2)).matches is True
    assert TableRow("CZ[0,1]", 2, 5, 2, 2, True, (4, 2, 2)).matches is False
    assert TableRow("CZ[0,1]", 2, 4, None, 2, True, (4, 2, 2)).matches is None
    assert TableRow("CZ[0,1]", 5, 4, 2, 2, True, None).matches is None
    assert TableRow("CZ[0,1]", 2, 4, 2, 3, True, (4, 2, 2)).to_dict()["matches"] is False


def test_construction_table_single_cell():
    rows = ConstructionEngine.construction_table(["CZ[0,1]"], [2])
    assert len(rows) == 1
    assert rows[0].n == 4
    assert rows[0].exact
    assert rows[0].reference == (4, 2, 2)


def test_construction_table_matches_reference():
    rows = ConstructionEngine.construction_table()
    assert [(row.target, row.d) for row in rows] == [(text, d) for text in TABLE_TARGETS for d in (2, 3)]
    for row in rows:
        assert row.exact, row.target
        assert (row.n, row.dX, row.dZ) == REFERENCE_TABLE[(row.target, row.d)]
        assert row.matches is True
