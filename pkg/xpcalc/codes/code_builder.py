"""
xpcalc - CSS Code Builder
Builds validated CssCode objects and enumerates their canonical codewords.

The codewords of a CSS code are |v>_L = sum_u |u.SX + v.LX>, so every question about diagonal
operators reduces to phases on the basis strings e_uv = u.SX + v.LX (mod 2).
"""

import logging
from itertools import combinations, product
from typing import Dict, FrozenSet, List, Tuple

import numpy as np

from models import CapExceededError, CodewordIndex, CssCode, DimensionError, IndependenceError, ZnMatrix
from ringalg import dual_rows, independent_row_indices, kernel, rank_mod2

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_CAP = 20


def _binary(rows, ncols: int = None) -> np.ndarray:
    matrix = np.asarray(rows, dtype=np.int64)
    if matrix.size == 0:
        return np.zeros((0, ncols or 0), dtype=np.int64)
    if matrix.ndim != 2:
        raise DimensionError("Check matrices must be 2D")
    if ((matrix != 0) & (matrix != 1)).any():
        raise DimensionError("Check matrices must be binary")
    return matrix


def build_code(SX, LX, drop_dependent: bool = False) -> CssCode:
    """
    Validate (SX, LX) and derive the Z-checks.

    Dependent X-checks are rejected, or dropped with a log message when drop_dependent is set.
    An X-logical dependent on the X-checks (or on earlier X-logicals) is always an error,
    because logical qubit labels follow the LX rows.

    Returns:
        CssCode with SZ the Howell (reduced row echelon) basis of ker(SX; LX) mod 2
    """
    SX_arr = np.asarray(SX, dtype=np.int64)
    LX_arr = np.asarray(LX, dtype=np.int64)
    if SX_arr.size == 0 and LX_arr.size == 0:
        raise DimensionError("A code needs at least one X-check or X-logical row")
    n = SX_arr.shape[1] if SX_arr.size else LX_arr.shape[1]
    SX_arr = _binary(SX_arr, n)
    LX_arr = _binary(LX_arr, n)
    if SX_arr.shape[1] != n or LX_arr.shape[1] != n:
        raise DimensionError(f"SX has {SX_arr.shape[1]} columns but LX has {LX_arr.shape[1]}")

    sx_matrix = ZnMatrix(2, SX_arr, n)
    keep = independent_row_indices(sx_matrix)
    if len(keep) != SX_arr.shape[0]:
        if not drop_dependent:
            raise IndependenceError("X-checks are linearly dependent mod 2")
        logger.info("Dropped %d dependent X-checks", SX_arr.shape[0] - len(keep))
        SX_arr = SX_arr[keep]
        sx_matrix = ZnMatrix(2, SX_arr, n)

    lx_keep = independent_row_indices(ZnMatrix(2, LX_arr, n), start=sx_matrix)
    if len(lx_keep) != LX_arr.shape[0]:
        raise IndependenceError("An X-logical depends on the X-checks or on other X-logicals")

    stacked = ZnMatrix(2, np.vstack([SX_arr, LX_arr]), n)
    SZ = kernel(stacked)
    logger.debug("Built code n=%d r=%d k=%d with %d Z-checks", n, SX_arr.shape[0], LX_arr.shape[0], SZ.nrows)
    return CssCode(n, SX_arr, LX_arr, SZ.rows)


def codeword_rows(code: CssCode, t: int) -> List[CodewordIndex]:
    """
    All (u, v) with wt(u) + wt(v) <= t, ordered by total weight and then lexicographically by support.
    Count is sum_{j <= t} C(r + k, j).
    """
    if t < 1:
        raise DimensionError(f"Level must be at least 1, got {t}")
    r, k = code.r, code.k
    generators = np.vstack([code.SX, code.LX])
    rows = []
    for weight in range(min(t, r + k) + 1):
        for positions in combinations(range(r + k), weight):
            a = np.zeros(r + k, dtype=np.int64)
            a[list(positions)] = 1
            e = (a @ generators) % 2 if r + k else np.zeros(code.n, dtype=np.int64)
            rows.append(CodewordIndex(
                u=tuple(int(bit) for bit in a[:r]),
                v=tuple(int(bit) for bit in a[r:]),
                e=tuple(int(bit) for bit in e),
            ))
    return rows


def codeword_matrix(code: CssCode, t: int, modulus: int) -> ZnMatrix:
    """E_M: the e_uv strings of codeword_rows stacked as a matrix mod N"""
    rows = codeword_rows(code, t)
    return ZnMatrix(modulus, np.array([row.e for row in rows], dtype=np.int64), code.n)


def canonical_codewords(code: CssCode, cap: int = DEFAULT_ENUMERATION_CAP) -> Dict[Tuple[int, ...], FrozenSet[Tuple[int, ...]]]:
    """
    For every v in Z_2^k, the 2^r basis strings of the unnormalised codeword |v>_L.
    Refuses when r + k exceeds the enumeration cap.
    """
    r, k = code.r, code.k
    if r + k > cap:
        raise CapExceededError(f"r + k = {r + k} exceeds the enumeration cap {cap}")
    codewords = {}
    for v in product((0, 1), repeat=k):
        offset = (np.array(v, dtype=np.int64) @ code.LX) % 2 if k else np.zeros(code.n, dtype=np.int64)
        strings = set()
        for u in product((0, 1), repeat=r):
            e = (offset + (np.array(u, dtype=np.int64) @ code.SX)) % 2 if r else offset
            strings.add(tuple(int(bit) for bit in e))
        codewords[tuple(v)] = frozenset(strings)
    return codewords


def logical_z_matrix(code: CssCode) -> np.ndarray:
    """
    Binary k x n matrix LZ with LZ.LX^T = I and LZ.SX^T = 0 (mod 2).
    Row i of the dual basis of (SX; LX) at position r + i.
    """
    stacked = ZnMatrix(2, np.vstack([code.SX, code.LX]), code.n)
    duals = dual_rows(stacked)
    return np.array(duals.rows[code.r:], dtype=np.int64).reshape(code.k, code.n)


def code_rank_check(code: CssCode) -> bool:
    """True when (SX; LX) has full rank and SZ is orthogonal to it (the CssCode invariants)"""
    stacked = np.vstack([code.SX, code.LX])
    if rank_mod2(ZnMatrix(2, stacked, code.n)) != code.r + code.k:
        return False
    return not ((code.SZ @ stacked.T) % 2).any()
