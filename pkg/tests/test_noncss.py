import numpy as np
import pytest

from models import (
    CapExceededError,
    CodeFormatError,
    CommutationError,
    DiagProduct,
    GateKind,
    IndependenceError,
    PhaseFitError,
    XpOp,
    ZnMatrix,
    format_pauli,
    parse_pauli,
)
from noncss import NonCssEngine, css_as_pauli, parse_stabilisers, serialize_stabilisers
from oracle import apply_unitary
from phaseops import format_gates, parse_gates
from ringalg import same_span


# ============================================================================
# Pauli strings and files
# ============================================================================

def test_pauli_strings():
    y = parse_pauli("Y")
    assert y == XpOp(2, 1, [1], [1])
    assert format_pauli(parse_pauli("-iXYZI")) == "-iXYZI"
    with pytest.raises(CodeFormatError):
        parse_pauli("XQ")
    with pytest.raises(CodeFormatError):
        parse_pauli("-")


def test_stabiliser_file(five_qubit):
    assert five_qubit.n == 5
    assert serialize_stabilisers(five_qubit) == "XZZXI\nIXZZX\nXIXZZ\nZXIXZ\n"
    with pytest.raises(CodeFormatError):
        parse_stabilisers("XX\nZ\n")
    with pytest.raises(CodeFormatError):
        parse_stabilisers("XX ZZ\n")
    with pytest.raises(CodeFormatError):
        parse_stabilisers("# empty\n")


# ============================================================================
# Canonical generators
# ============================================================================

def test_canonicalise_five_qubit_code(five_qubit):
    canonical = NonCssEngine.canonicalise(five_qubit)
    assert len(canonical.sx) == 4
    assert canonical.sz == []
    assert [op.x.tolist() for op in canonical.lx] == [[0, 0, 0, 0, 1]]
    for logical in canonical.lx:
        for op in five_qubit.generators:
            assert (int(logical.x @ op.z) + int(op.x @ logical.z)) % 2 == 0


def test_canonicalise_rejects_bad_generators():
    with pytest.raises(CommutationError):
        NonCssEngine.canonicalise(parse_stabilisers("XI\nZI\n"))
    with pytest.raises(IndependenceError):
        NonCssEngine.canonicalise(parse_stabilisers("ZZ\nZZ\n"))
    with pytest.raises(CodeFormatError):
        NonCssEngine.canonicalise(parse_stabilisers("iXI\n"))


def test_find_q_removes_signs():
    canonical = NonCssEngine.canonicalise(parse_stabilisers("-ZZ\n"))
    q = NonCssEngine.find_q(canonical.sz, 2)
    assert q.tolist() == [0, 1]
    assert NonCssEngine.conjugate(canonical.sz[0], q).p == 0


def test_find_q_rejects_minus_identity():
    canonical = NonCssEngine.canonicalise(parse_stabilisers("ZI\n-IZ\n"))
    assert NonCssEngine.find_q(canonical.sz, 2).tolist() == [0, 1]
    with pytest.raises(IndependenceError):
        NonCssEngine.find_q([XpOp.diagonal(2, [0, 0], p=2)], 2)


# ============================================================================
# Reduction to CSS codes
# ============================================================================

def test_five_qubit_code_maps_to_css(five_qubit):
    reduction = NonCssEngine.map_to_css(five_qubit)
    css = reduction.css_code
    assert (css.n, css.k, css.r) == (5, 1, 4)
    assert css.SZ.shape[0] == 0
    assert css.LX.tolist() == [[0, 0, 0, 0, 1]]
    expected = ZnMatrix(2, np.array([[1, 0, 0, 1, 0], [0, 1, 0, 0, 1], [1, 0, 1, 0, 0], [0, 1, 0, 1, 0]]), 5)
    assert same_span(ZnMatrix(2, css.SX, 5), expected)
    assert reduction.q == (0, 0, 0, 0, 0)
    assert NonCssEngine.verify_reduction(five_qubit, reduction)


def test_distances_before_and_after_reduction(five_qubit):
    reduction = NonCssEngine.map_to_css(five_qubit)
    assert NonCssEngine.pauli_distance(five_qubit) == 3
    assert NonCssEngine.pauli_distance(css_as_pauli(reduction.css_code)) == 1
    assert NonCssEngine.pauli_distance(five_qubit, cap=20) is None


def test_css_input_needs_no_correction(code_422):
    reduction = NonCssEngine.map_to_css(css_as_pauli(code_422))
    assert reduction.q == (0, 0, 0, 0)
    assert reduction.D.is_identity()
    assert reduction.css_code.SX.tolist() == [[1, 1, 1, 1]]


@pytest.mark.parametrize("text, gates", [("Y\n", "S[0]"), ("YY\n", "CZ[0,1]")])
def test_y_generators_need_diagonal_cliffords(text, gates):
    stab = parse_stabilisers(text)
    reduction = NonCssEngine.map_to_css(stab)
    assert reduction.D == parse_gates(gates, 2, stab.n)
    assert format_gates(reduction.D) == gates


@pytest.mark.parametrize("text, gates", [("Y\n", "S[0]"), ("YY\n", "CZ[0,1]"), ("XX\n", "I")])
def test_find_d_on_canonical_generators(text, gates):
    canonical = NonCssEngine.canonicalise(parse_stabilisers(text))
    D = NonCssEngine.find_D(canonical)
    assert D.N == 2
    assert format_gates(D) == gates


def test_find_d_needs_sign_free_diagonal_generators():
    canonical = NonCssEngine.canonicalise(parse_stabilisers("-ZZ\n"))
    with pytest.raises(PhaseFitError):
        NonCssEngine.find_D(canonical)


def test_signed_code_reduction():
    stab = parse_stabilisers("-ZZ\n")
    reduction = NonCssEngine.map_to_css(stab)
    assert reduction.q == (0, 1)
    assert reduction.D.is_identity()
    assert reduction.css_code.LX.tolist() == [[1, 1]]


def test_transfer_logical(five_qubit):
    reduction = NonCssEngine.map_to_css(five_qubit)
    logical_z = XpOp.diagonal(2, [1, 1, 1, 1, 1])
    transferred = NonCssEngine.transfer_logical(reduction, logical_z)
    states = NonCssEngine.logical_states(reduction)
    for v, state in enumerate(states):
        assert apply_unitary(state, transferred).allclose(state.scaled((-1) ** v))


def test_transfer_conjugates_by_q():
    reduction = NonCssEngine.map_to_css(parse_stabilisers("-ZZ\n"))
    transferred = NonCssEngine.transfer_logical(reduction, parse_gates("Z[1]", 2, 2))
    assert transferred == DiagProduct.of(2, 2, GateKind.CP, [(2, [1])], phase=2)
    with pytest.raises(CodeFormatError):
        NonCssEngine.transfer_logical(reduction, XpOp.x_string(2, [1, 0]))


def test_dense_cap_is_enforced(five_qubit):
    with pytest.raises(CapExceededError):
        NonCssEngine.map_to_css(five_qubit, cap=4)
