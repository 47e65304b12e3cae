"""
xpcalc - Linear Algebra over Z_N
Howell normal form, kernels, residues, span membership and span intersection for N = 2^t.
Mod-2 linear algebra is the N = 2 instance of the same functions.

All functions are pure: they take ZnMatrix values and return new ones.
"""

import logging
from typing import List, Optional, Sequence

import numpy as np

from models.errors import DimensionError, IndependenceError
from models.zn_matrix import ZnMatrix

logger = logging.getLogger(__name__)


def valuation(value: int) -> int:
    """2-adic valuation of a nonzero integer"""
    return (value & -value).bit_length() - 1


def leading_index(row: np.ndarray) -> int:
    """Index of the first nonzero entry, len(row) for the zero row"""
    nonzero = np.flatnonzero(row)
    return int(nonzero[0]) if nonzero.size else len(row)


def howell(M: ZnMatrix) -> ZnMatrix:
    """
    Howell normal form of M.

    Columns are processed left to right. The pivot row is the candidate whose entry has the smallest
    2-adic valuation, scaled by a unit so the pivot becomes a power of two h dividing N. The other
    candidates are cleared, and the annihilator (N/h)*pivot goes back to the worklist because it
    vanishes at this column but may not vanish later. Finally entries above each pivot are reduced
    below that pivot.

    Returns:
        ZnMatrix flagged howell, equal for any two inputs with the same row span
    """
    N = M.modulus
    pending = M.rows[M.rows.any(axis=1)].copy()
    pivots: List[np.ndarray] = []
    pivot_cols: List[int] = []

    for col in range(M.ncols):
        if not pending.shape[0]:
            break
        column = pending[:, col]
        candidates = np.flatnonzero(column)
        if not candidates.size:
            continue
        values = column[candidates]
        best = int(candidates[np.argmin(values & -values)])
        value = int(pending[best, col])
        unit = value >> valuation(value)
        pivot = (pending[best] * pow(unit, -1, N)) % N
        h = int(pivot[col])

        others = candidates[candidates != best]
        reduced = (pending[others] - (pending[others, col] // h)[:, None] * pivot[None, :]) % N
        annihilator = ((N // h) * pivot) % N
        pending = np.vstack([pending[column == 0], reduced, annihilator[None, :]])
        pending = pending[pending.any(axis=1)]

        pivots.append(pivot)
        pivot_cols.append(col)

    for i in range(len(pivots)):
        for j in range(i + 1, len(pivots)):
            col = pivot_cols[j]
            h = int(pivots[j][col])
            pivots[i] = (pivots[i] - (int(pivots[i][col]) // h) * pivots[j]) % N

    if not pivots:
        return ZnMatrix.empty(N, M.ncols)
    return ZnMatrix(N, np.array(pivots), M.ncols, howell=True)


def _ensure_howell(K: ZnMatrix) -> ZnMatrix:
    return K if K.howell else howell(K)


def kernel(M: ZnMatrix) -> ZnMatrix:
    """
    Howell basis of {v : v . M^T = 0 mod N}.

    Works on the augmented matrix (M^T | I): its row span is {(M v | v)}, and by the Howell property
    the rows whose left block vanishes span exactly the kernel.
    """
    N, n = M.modulus, M.ncols
    if M.is_empty():
        return ZnMatrix.identity(N, n)
    m = M.nrows
    augmented = np.concatenate([M.rows.T, np.eye(n, dtype=np.int64)], axis=1)
    H = howell(ZnMatrix(N, augmented, m + n))
    tail = [row[m:] for row in H.rows if not row[:m].any()]
    logger.debug("kernel of %dx%d matrix mod %d has %d generators", m, n, N, len(tail))
    if not tail:
        return ZnMatrix.empty(N, n)
    return howell(ZnMatrix(N, np.array(tail), n))


def _as_vector(z: Sequence[int], K: ZnMatrix) -> np.ndarray:
    vector = np.asarray(z, dtype=np.int64)
    if vector.ndim != 1 or len(vector) != K.ncols:
        raise DimensionError(f"Vector of length {vector.shape} against {K.ncols} columns")
    return vector % K.modulus


def residue(K: ZnMatrix, z: Sequence[int]) -> np.ndarray:
    """
    Canonical representative of z modulo span(K).
    Zero exactly when z is in the span, and the same for every member of a coset.
    """
    vector = _as_vector(z, K)
    N = K.modulus
    for row in _ensure_howell(K).rows:
        col = leading_index(row)
        vector = (vector - (int(vector[col]) // int(row[col])) * row) % N
    return vector


def in_span(K: ZnMatrix, z: Sequence[int]) -> bool:
    return not residue(K, z).any()


def span_intersection(A: ZnMatrix, B: ZnMatrix) -> ZnMatrix:
    """
    Howell basis of span(A) and span(B) intersected.
    Uses the block matrix ((A | A), (B | 0)): members with zero left block have right block a.A = -b.B.
    """
    if A.modulus != B.modulus or A.ncols != B.ncols:
        raise DimensionError("Span intersection needs equal modulus and column count")
    N, n = A.modulus, A.ncols
    if A.is_empty() or B.is_empty():
        return ZnMatrix.empty(N, n)
    top = np.concatenate([A.rows, A.rows], axis=1)
    bottom = np.concatenate([B.rows, np.zeros_like(B.rows)], axis=1)
    H = howell(ZnMatrix(N, np.vstack([top, bottom]), 2 * n))
    tail = [row[n:] for row in H.rows if not row[:n].any()]
    if not tail:
        return ZnMatrix.empty(N, n)
    return howell(ZnMatrix(N, np.array(tail), n))


def same_span(A: ZnMatrix, B: ZnMatrix) -> bool:
    return howell(A) == howell(B)


def rank_mod2(M: ZnMatrix) -> int:
    """Rank of a binary matrix (the number of Howell rows mod 2)"""
    return howell(M.with_modulus(2)).nrows


def independent_row_indices(M: ZnMatrix, start: Optional[ZnMatrix] = None) -> List[int]:
    """
    Greedy selection, in row order, of the rows of a binary matrix that are independent mod 2
    of the rows already chosen (and of start, when given).
    """
    basis = start.with_modulus(2) if start is not None else ZnMatrix.empty(2, M.ncols)
    chosen: List[int] = []
    for i, row in enumerate(M.with_modulus(2).rows):
        if not row.any() or in_span(basis, row):
            continue
        chosen.append(i)
        basis = howell(basis.stack(ZnMatrix(2, row.reshape(1, -1), M.ncols)))
    return chosen


def dual_rows(G: ZnMatrix) -> ZnMatrix:
    """
    For a binary matrix G with independent rows, the rows W with W . G^T = I mod 2.

    Each row w_i reads off coefficient i: if y = a.G then w_i . y = a_i.
    Uses the Howell form of (G^T | I) mod 2; full row rank puts a pivot on every left column,
    so the row with pivot at left column i has left block e_i.
    """
    m, n = G.nrows, G.ncols
    if m == 0:
        return ZnMatrix.empty(2, n)
    augmented = np.concatenate([G.rows.T % 2, np.eye(n, dtype=np.int64)], axis=1)
    H = howell(ZnMatrix(2, augmented, m + n))
    duals = np.zeros((m, n), dtype=np.int64)
    found = 0
    for row in H.rows:
        col = leading_index(row)
        if col < m:
            if row[:m].sum() != 1:
                raise IndependenceError("Rows are dependent mod 2")
            duals[col] = row[m:]
            found += 1
    if found != m:
        raise IndependenceError("Rows are dependent mod 2")
    return ZnMatrix(2, duals, n)
