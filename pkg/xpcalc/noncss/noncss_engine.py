"""
xpcalc - Non-CSS Engine
Maps a Pauli stabiliser code C onto a CSS code C' with C = D Q C', Q = XP_2(0|q|0) an X string and
D a diagonal level-2 Clifford operator (S, Z and CZ gates).

Q removes the signs of the diagonal generators; D is read off the amplitudes of the stabiliser state
and fitted as a quadratic form mod 4. A diagonal logical operator B on C' gives the logical operator
Q B Q on C with the same action, because D commutes with every diagonal operator.
"""

import logging
from itertools import combinations, product
from math import comb
from typing import List, Optional, Union

import numpy as np

from codes import build_code, DEFAULT_DISTANCE_CAP
from models import (
    CanonicalGenerators,
    CapExceededError,
    CodeFormatError,
    CommutationError,
    CssCode,
    CssReduction,
    DiagProduct,
    GateKind,
    IndependenceError,
    PauliStabCode,
    PhaseFitError,
    RpOp,
    XpOp,
    ZnMatrix,
)
from oracle import DenseState, DEFAULT_DENSE_CAP, apply_unitary, apply_x, project
from phaseops import conjugate_product_by_xstring, to_cp
from ringalg import dual_rows, howell, in_span, independent_row_indices, kernel

logger = logging.getLogger(__name__)

FIT_TOLERANCE = 1e-6

# single-qubit Pauli letters X, Z, Y as (x, z) bits
PAULI_LETTERS = ((1, 0), (0, 1), (1, 1))


def _commute(a: XpOp, b: XpOp) -> bool:
    return (int(a.x @ b.z) + int(b.x @ a.z)) % 2 == 0


def _eliminate(rows: List[XpOp], part: str) -> int:
    """
    Reduced row echelon form of the x or z parts, in place, multiplying whole operators so phases
    are tracked. Returns the number of pivot rows, which come first.
    """
    pivot_row = 0
    n = rows[0].n if rows else 0
    for col in range(n):
        hit = next((i for i in range(pivot_row, len(rows)) if getattr(rows[i], part)[col]), None)
        if hit is None:
            continue
        rows[pivot_row], rows[hit] = rows[hit], rows[pivot_row]
        pivot = rows[pivot_row]
        for i in range(len(rows)):
            if i != pivot_row and getattr(rows[i], part)[col]:
                rows[i] = rows[i].multiply(pivot)
        pivot_row += 1
    return pivot_row


def _binary_rows(ops: List[XpOp], part: str, n: int) -> np.ndarray:
    if not ops:
        return np.zeros((0, n), dtype=np.int64)
    return np.array([getattr(op, part) for op in ops], dtype=np.int64) % 2


def css_as_pauli(code: CssCode) -> PauliStabCode:
    """The CSS code as Pauli generators: X strings for SX, Z strings for SZ"""
    zeros = np.zeros(code.n, dtype=np.int64)
    generators = [XpOp(2, 0, row, zeros) for row in code.SX]
    generators += [XpOp(2, 0, zeros, row) for row in code.SZ]
    return PauliStabCode(code.n, generators)


class NonCssEngine:
    """
    Reduction of general stabiliser codes to CSS codes
    """

    @staticmethod
    def canonicalise(stab: PauliStabCode) -> CanonicalGenerators:
        """
        Symplectic Gaussian elimination of the generators.

        The X parts are brought to reduced row echelon form; generators left without an X part are
        the diagonal set, whose Z parts are reduced in turn. X-logicals complete the X parts of the
        first set to a basis of the vectors orthogonal to the diagonal set, taken greedily from the
        last qubit, and get Z parts that make them commute with everything.

        Returns:
            CanonicalGenerators (sx, sz, lx)
        """
        n = stab.n
        generators = list(stab.generators)
        for op in generators:
            if (op.p - int(op.x @ op.z)) % 2:
                raise CodeFormatError(f"Generator {op} is not Hermitian")
        for a, b in combinations(range(len(generators)), 2):
            if not _commute(generators[a], generators[b]):
                raise CommutationError(f"Generators {a} and {b} anticommute")

        rows = list(generators)
        r_x = _eliminate(rows, "x")
        sx, diagonal = rows[:r_x], rows[r_x:]
        r_z = _eliminate(diagonal, "z")
        if r_z != len(diagonal):
            raise IndependenceError("Stabiliser generators are dependent")
        sz = diagonal

        sx_x = _binary_rows(sx, "x", n)
        sz_z = _binary_rows(sz, "z", n)
        orthogonal = kernel(ZnMatrix(2, sz_z, n)) if sz else ZnMatrix.identity(2, n)
        candidates = ZnMatrix(2, orthogonal.rows[::-1], n)
        chosen = independent_row_indices(candidates, start=ZnMatrix(2, sx_x, n))
        k = n - r_x - r_z
        if len(chosen) != k:
            raise IndependenceError(f"Expected {k} X-logicals, found {len(chosen)}")
        lx_x = candidates.rows[chosen].reshape(k, n)

        stacked = np.vstack([sx_x, lx_x])
        lx = []
        if k:
            duals = dual_rows(ZnMatrix(2, stacked, n)).rows
            sx_z = _binary_rows(sx, "z", n)
            for row in lx_x:
                targets = np.concatenate([(sx_z @ row) % 2, np.zeros(k, dtype=np.int64)])
                lz = (targets @ duals) % 2
                lx.append(XpOp(2, int(row @ lz), row, lz))
        logger.debug("Canonical split r_x=%d r_z=%d k=%d", r_x, r_z, k)
        return CanonicalGenerators(sx, sz, lx)

    @staticmethod
    def find_q(sz: List[XpOp], n: int) -> np.ndarray:
        """
        Bit vector q with p_i/2 + q.z_i = 0 mod 2 for every diagonal generator, so that conjugation
        by X^q makes all of them sign-free.

        Returns:
            q read from the top row (1|q) of the kernel of the rows (p_i/2 | z_i)
        """
        if not sz:
            return np.zeros(n, dtype=np.int64)
        rows = np.array([[(op.p // 2) % 2] + [int(bit) for bit in op.z] for op in sz], dtype=np.int64)
        K = kernel(ZnMatrix(2, rows, n + 1))
        if not K.nrows or K.rows[0][0] != 1:
            raise IndependenceError("Diagonal generators contain -I")
        return np.array(K.rows[0][1:], dtype=np.int64)

    @staticmethod
    def conjugate(op: XpOp, q) -> XpOp:
        """X^q op X^q"""
        Q = XpOp.x_string(op.N, q)
        return Q.multiply(op).multiply(Q)

    @staticmethod
    def find_D(generators: CanonicalGenerators, cap: int = DEFAULT_DENSE_CAP) -> DiagProduct:
        """
        Diagonal operator D with C = D C' for a code whose diagonal generators are sign-free.

        The state stabilised by sx, sz and lx is built as a dense vector from |0...0>. Its amplitudes
        on e = a.G, G the X parts of (sx; lx), have phases i^f(a) with f a quadratic form mod 4.
        Linear coefficients give RP_2(c_i, w_i) gates and even bilinear ones give
        RP_2(c_ij/2, w_i) RP_2(c_ij/2, w_j) RP_2(-c_ij/2, w_i + w_j), with w_i the dual rows of G.

        Returns:
            CP product at precision 2 (S, Z and CZ terms)
        """
        n = generators.n
        if n > cap:
            raise CapExceededError(f"Phase fit needs a dense state on {n} qubits, cap is {cap}")
        if any(op.p % 4 for op in generators.sz):
            raise PhaseFitError("Diagonal generators must be sign-free before fitting D")

        state = DenseState.zero(n, cap)
        for op in generators.sx + generators.sz + generators.lx:
            state = project(state, op)

        G = np.vstack([_binary_rows(generators.sx, "x", n), _binary_rows(generators.lx, "x", n)])
        m = G.shape[0]
        base = state.amplitudes[0]
        if abs(base) < FIT_TOLERANCE:
            raise PhaseFitError("Stabiliser state has no amplitude on |0...0>")
        if len(state.support()) != 1 << m:
            raise PhaseFitError(f"Stabiliser state has {len(state.support())} basis states, expected {1 << m}")

        phases = {}
        for a in product((0, 1), repeat=m):
            e = (np.array(a, dtype=np.int64) @ G) % 2 if m else np.zeros(n, dtype=np.int64)
            ratio = state.amplitude(e) / base
            f = int(np.rint(np.angle(ratio) / (np.pi / 2))) % 4
            if abs(ratio - 1j ** f) > FIT_TOLERANCE:
                raise PhaseFitError(f"Amplitude ratio {ratio:.6f} on {e} is not a power of i")
            phases[a] = f

        unit = [tuple(int(i == j) for j in range(m)) for i in range(m)]
        linear = [phases[unit[i]] for i in range(m)]
        bilinear = {}
        for i, j in combinations(range(m), 2):
            pair = tuple(int(l in (i, j)) for l in range(m))
            value = (phases[pair] - linear[i] - linear[j]) % 4
            if value % 2:
                raise PhaseFitError(f"Odd bilinear coefficient between rows {i} and {j}")
            if value:
                bilinear[(i, j)] = value
        for a, f in phases.items():
            fitted = sum(linear[i] * a[i] for i in range(m))
            fitted += sum(value * a[i] * a[j] for (i, j), value in bilinear.items())
            if (fitted - f) % 4:
                raise PhaseFitError(f"Phases are not a quadratic form mod 4 at {a}")

        W = dual_rows(ZnMatrix(2, G, n)).rows if m else np.zeros((0, n), dtype=np.int64)
        terms = [RpOp(2, linear[i], W[i]) for i in range(m) if linear[i]]
        for (i, j), value in bilinear.items():
            half = value // 2
            terms += [RpOp(2, half, W[i]), RpOp(2, half, W[j]), RpOp(2, -half, (W[i] + W[j]) % 2)]
        D = to_cp(DiagProduct(2, n, GateKind.RP, tuple(terms)))
        logger.debug("Fitted D with %d linear and %d bilinear coefficients", sum(1 for c in linear if c), len(bilinear))
        return D

    @staticmethod
    def logical_states(reduction: CssReduction, cap: int = DEFAULT_DENSE_CAP) -> List[DenseState]:
        """
        D Q |v>_L for every logical basis state |v>_L of C', as normalised dense states
        """
        code = reduction.css_code
        stabilisers = css_as_pauli(code).generators
        states = []
        for v in product((0, 1), repeat=code.k):
            start = (np.array(v, dtype=np.int64) @ code.LX) % 2 if code.k else np.zeros(code.n, dtype=np.int64)
            state = DenseState.basis(start, cap)
            for op in stabilisers:
                state = project(state, op)
            state = apply_x(state, reduction.q)
            state = apply_unitary(state, reduction.D)
            states.append(state.normalised())
        return states

    @staticmethod
    def verify_reduction(stab: PauliStabCode, reduction: CssReduction, cap: int = DEFAULT_DENSE_CAP) -> bool:
        """True when every generator of the original code stabilises every D Q |v>_L"""
        for state in NonCssEngine.logical_states(reduction, cap):
            for op in stab.generators:
                if not apply_unitary(state, op).allclose(state):
                    return False
        return True

    @staticmethod
    def map_to_css(stab: PauliStabCode, cap: int = DEFAULT_DENSE_CAP) -> CssReduction:
        """
        Full reduction C = D Q C'.

        Returns:
            CssReduction, checked as dense states
        """
        canonical = NonCssEngine.canonicalise(stab)
        n = stab.n
        q = NonCssEngine.find_q(canonical.sz, n)
        conjugated = CanonicalGenerators(
            [NonCssEngine.conjugate(op, q) for op in canonical.sx],
            [NonCssEngine.conjugate(op, q) for op in canonical.sz],
            [NonCssEngine.conjugate(op, q) for op in canonical.lx],
        )
        shifted = NonCssEngine.find_D(conjugated, cap)
        # C = Q D' C' = (Q D' Q) Q C'
        D = conjugate_product_by_xstring(shifted, q)
        css_code = build_code(
            _binary_rows(canonical.sx, "x", n),
            _binary_rows(canonical.lx, "x", n),
        )
        reduction = CssReduction(css_code, tuple(int(bit) for bit in q), D)
        if not NonCssEngine.verify_reduction(stab, reduction, cap):
            raise PhaseFitError("D Q C' does not reproduce the stabiliser code")
        logger.info("Mapped %d-qubit stabiliser code to %r", n, css_code)
        return reduction

    @staticmethod
    def transfer_logical(reduction: CssReduction, op: Union[DiagProduct, XpOp]) -> Union[DiagProduct, XpOp]:
        """
        Diagonal logical operator B of C' to the logical operator Q B Q of C with the same action
        """
        if isinstance(op, XpOp):
            if not op.is_diagonal():
                raise CodeFormatError("Only diagonal logical operators can be transferred")
            return NonCssEngine.conjugate(op, reduction.q)
        return conjugate_product_by_xstring(op, reduction.q)

    @staticmethod
    def pauli_distance(stab: PauliStabCode, cap: int = DEFAULT_DISTANCE_CAP) -> Optional[int]:
        """
        Smallest weight of a Pauli operator commuting with every generator but not in the
        stabiliser group, by enumeration in order of weight.

        Returns:
            the distance, or None when the enumeration would exceed cap operators
            (or when there is no logical operator at all)
        """
        n = stab.n
        gx = _binary_rows(stab.generators, "x", n)
        gz = _binary_rows(stab.generators, "z", n)
        group = howell(ZnMatrix(2, np.hstack([gx, gz]), 2 * n))
        enumerated = 0
        for weight in range(1, n + 1):
            enumerated += comb(n, weight) * 3 ** weight
            if enumerated > cap:
                logger.warning("Pauli distance search stopped at weight %d, cap %d", weight, cap)
                return None
            for support in combinations(range(n), weight):
                for letters in product(PAULI_LETTERS, repeat=weight):
                    x = np.zeros(n, dtype=np.int64)
                    z = np.zeros(n, dtype=np.int64)
                    for qubit, (x_bit, z_bit) in zip(support, letters):
                        x[qubit], z[qubit] = x_bit, z_bit
                    if ((gx @ z + gz @ x) % 2).any():
                        continue
                    if not in_span(group, np.concatenate([x, z])):
                        return weight
        return None
