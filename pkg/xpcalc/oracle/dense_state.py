"""
xpcalc - Dense State Vectors
Small exact state-vector simulator for the checks that need amplitudes (non-CSS codes, conjugation).
Qubit 0 is the most significant bit of the basis index.
"""

import logging
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from models import CapExceededError, DiagProduct, DimensionError, XpOp
from oracle.phase_oracle import PhaseFn, phase_of_product

logger = logging.getLogger(__name__)

DEFAULT_DENSE_CAP = 14
TOLERANCE = 1e-9


def basis_bits(n: int) -> np.ndarray:
    """(2^n, n) array, row j holds the bits of basis index j"""
    indices = np.arange(1 << n, dtype=np.int64)
    shifts = n - 1 - np.arange(n, dtype=np.int64)
    return (indices[:, None] >> shifts[None, :]) & 1


def basis_index(bits: Sequence[int]) -> int:
    index = 0
    for bit in bits:
        index = (index << 1) | (int(bit) & 1)
    return index


@dataclass(frozen=True, eq=False)
class DenseState:
    """
    State vector on n qubits

        n: qubit count, at most the dense cap
        amplitudes: complex array of length 2^n
    """

    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amplitudes = np.asarray(self.amplitudes, dtype=np.complex128)
        if amplitudes.shape != (1 << self.n,):
            raise DimensionError(f"{amplitudes.shape[0]} amplitudes for {self.n} qubits")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def basis(cls, bits: Sequence[int], cap: int = DEFAULT_DENSE_CAP) -> "DenseState":
        n = len(bits)
        if n > cap:
            raise CapExceededError(f"Dense state on {n} qubits exceeds cap {cap}")
        amplitudes = np.zeros(1 << n, dtype=np.complex128)
        amplitudes[basis_index(bits)] = 1.0
        return cls(n, amplitudes)

    @classmethod
    def zero(cls, n: int, cap: int = DEFAULT_DENSE_CAP) -> "DenseState":
        return cls.basis([0] * n, cap)

    def amplitude(self, bits: Sequence[int]) -> complex:
        return complex(self.amplitudes[basis_index(bits)])

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalised(self) -> "DenseState":
        norm = self.norm()
        if norm < TOLERANCE:
            raise DimensionError("Cannot normalise the zero vector")
        return DenseState(self.n, self.amplitudes / norm)

    def add(self, other: "DenseState") -> "DenseState":
        if other.n != self.n:
            raise DimensionError("States on different qubit counts")
        return DenseState(self.n, self.amplitudes + other.amplitudes)

    def scaled(self, factor: complex) -> "DenseState":
        return DenseState(self.n, self.amplitudes * factor)

    def support(self):
        """Basis bit strings with nonzero amplitude"""
        bits = basis_bits(self.n)
        return [tuple(int(b) for b in bits[j]) for j in np.flatnonzero(np.abs(self.amplitudes) > TOLERANCE)]

    def equal_up_to_phase(self, other: "DenseState") -> bool:
        """Same ray: |<a|b>| = |a| |b|"""
        if other.n != self.n:
            return False
        overlap = abs(np.vdot(self.amplitudes, other.amplitudes))
        return bool(abs(overlap - self.norm() * other.norm()) < TOLERANCE * max(1.0, self.norm() * other.norm()))

    def allclose(self, other: "DenseState") -> bool:
        return other.n == self.n and bool(np.allclose(self.amplitudes, other.amplitudes, atol=TOLERANCE))


def _phase_factors(N: int, exponents: np.ndarray) -> np.ndarray:
    return np.exp(1j * np.pi * (exponents % (2 * N)) / N)


def apply_unitary(state: DenseState, op: Union[PhaseFn, DiagProduct, XpOp]) -> DenseState:
    """
    Apply a diagonal phase function, a CP/RP product or an XP operator.
    XP_N(p|x|z) acts as w^p X^x P^z: the diagonal part first, then the X string.
    """
    if isinstance(op, DiagProduct):
        op = phase_of_product(op)
    if op.n != state.n:
        raise DimensionError(f"Operator on {op.n} qubits applied to a state on {state.n}")
    if isinstance(op, PhaseFn):
        bits = basis_bits(state.n)
        exponents = np.array([op(tuple(row)) for row in bits], dtype=np.int64)
        return DenseState(state.n, state.amplitudes * _phase_factors(op.N, exponents))

    bits = basis_bits(state.n)
    exponents = op.p + 2 * (bits @ op.z)
    amplitudes = state.amplitudes * _phase_factors(op.N, exponents)
    mask = basis_index(op.x)
    if mask:
        # new[j] = old[j ^ mask]
        amplitudes = amplitudes[np.arange(1 << state.n, dtype=np.int64) ^ mask]
    return DenseState(state.n, amplitudes)


def apply_x(state: DenseState, x: Sequence[int]) -> DenseState:
    return apply_unitary(state, XpOp.x_string(2, x))


def project(state: DenseState, generator: XpOp) -> DenseState:
    """(I + g)/2 applied to the state, for a stabiliser g with g^2 = I"""
    return state.add(apply_unitary(state, generator)).scaled(0.5)
