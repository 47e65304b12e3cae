import numpy as np
import pytest

from models import CapExceededError, CheckOutcome, DimensionError, XpOp
from oracle import (
    DenseState,
    PhaseFn,
    apply_unitary,
    apply_x,
    basis_bits,
    basis_index,
    check_logical,
    phase_of_product,
    project,
    same_phase_function,
)
from phaseops import parse_gates, to_rp


# ============================================================================
# Logical operator oracle
# ============================================================================

def test_transversal_z_is_identity_on_422(code_422):
    result = check_logical(code_422, phase_of_product(parse_gates("Z[0] Z[1] Z[2] Z[3]", 2)))
    assert result.outcome == CheckOutcome.IDENTITY
    assert result.action.is_identity()


def test_s_s_cz_acts_as_logical_s_s_on_422(code_422):
    op = phase_of_product(parse_gates("S[1] S[2] CZ[0,3]", 4, 4))
    result = check_logical(code_422, op)
    assert result.outcome == CheckOutcome.LOGICAL
    assert result.action == parse_gates("S[0] S[1]", 4, 2)


def test_single_s_is_not_logical_on_422(code_422):
    result = check_logical(code_422, phase_of_product(parse_gates("S[0]", 4, 4)))
    assert result.outcome == CheckOutcome.NOT_LOGICAL
    assert not result.is_logical
    assert result.witness == ((0, 0, 0, 0), (1, 1, 1, 1))
    assert result.to_dict() == {"outcome": "not_logical", "witness": ["0000", "1111"]}


def test_hypercube_ccz_from_z_component(hypercube):
    op = PhaseFn.from_xp(XpOp.diagonal(8, [1, 3, 3, 1, 3, 1, 1, 3]))
    result = check_logical(hypercube, op)
    assert result.outcome == CheckOutcome.LOGICAL
    assert result.action == parse_gates("CCZ[0,1,2]", 8, 3)


def test_oracle_refuses_large_codes(hypercube):
    with pytest.raises(CapExceededError):
        check_logical(hypercube, PhaseFn.zero(2, 8), cap=3)


def test_oracle_rejects_wrong_length(code_422):
    with pytest.raises(DimensionError):
        check_logical(code_422, PhaseFn.zero(2, 5))


def test_phase_functions_compose():
    ccz = phase_of_product(parse_gates("CCZ[0,1,2]", 8))
    assert same_phase_function(ccz.then(ccz.inverse()), PhaseFn.zero(8, 3))
    assert ccz((1, 1, 1)) == 8
    with pytest.raises(DimensionError):
        ccz((1, 1))


def test_rp_and_cp_forms_have_one_phase_function():
    cp = parse_gates("CS[0,1] T[2] CCZ[0,1,2]", 8)
    rp = to_rp(cp, allow_rescale=True)
    assert same_phase_function(phase_of_product(rp), phase_of_product(cp.rescale(rp.N)))
    assert not same_phase_function(phase_of_product(cp), PhaseFn.zero(8, 3))


def test_from_xp_needs_diagonal():
    with pytest.raises(DimensionError):
        PhaseFn.from_xp(XpOp.x_string(2, [1, 0]))


# ============================================================================
# Dense states
# ============================================================================

def test_basis_ordering():
    assert basis_bits(2).tolist() == [[0, 0], [0, 1], [1, 0], [1, 1]]
    assert basis_index([1, 0, 1]) == 5


def test_xp_applies_diagonal_part_before_x():
    # P|1> = i|1> at precision 4, then X moves it to |0>
    state = apply_unitary(DenseState.basis([1]), XpOp(4, 0, [1], [1]))
    assert state.amplitude([0]) == pytest.approx(1j)
    state = apply_unitary(DenseState.basis([0]), XpOp(4, 0, [1], [1]))
    assert state.amplitude([1]) == pytest.approx(1)


def test_apply_products_and_x_strings():
    state = apply_x(DenseState.zero(2), [1, 1])
    assert state.support() == [(1, 1)]
    flipped = apply_unitary(state, parse_gates("CZ[0,1]", 2))
    assert flipped.amplitude([1, 1]) == pytest.approx(-1)
    assert flipped.equal_up_to_phase(state)
    assert not flipped.allclose(state)


def test_projection_onto_bell_state():
    state = project(DenseState.zero(2), XpOp(2, 0, [1, 1], [0, 0]))
    assert state.norm() == pytest.approx(1 / np.sqrt(2))
    bell = state.normalised()
    assert bell.support() == [(0, 0), (1, 1)]
    assert bell.amplitude([1, 1]) == pytest.approx(1 / np.sqrt(2))
    assert project(bell, XpOp(2, 0, [0, 0], [1, 1])).allclose(bell)


def test_dense_cap_and_zero_vector():
    with pytest.raises(CapExceededError):
        DenseState.zero(15)
    minus_z = XpOp(2, 2, [0], [0])
    with pytest.raises(DimensionError):
        project(DenseState.zero(1), minus_z).normalised()
