"""
xpcalc - Toric Codes
k-dimensional toric code of distance d, the total complex of k periodic repetition codes.

Qubits sit on the edges of the periodic lattice Z_d^k: edge (i, a) joins a - e_i to a in direction i
and has index i d^k + idx(a), with idx(a) = sum_j a_j d^(k-1-j). X-checks are vertex stars,
X-logical i is the cut of direction-i edges with a_i = d - 1, and Z-logical i is the closed line of
direction-i edges through the origin. The k Z-logicals have weight d and pairwise disjoint supports.
"""

import logging
from itertools import product
from typing import Tuple

import numpy as np

from codes import build_code
from models import CssCode, DimensionError, ZnMatrix
from ringalg import independent_row_indices

logger = logging.getLogger(__name__)


def _check(k: int, d: int):
    if k < 1:
        raise DimensionError(f"Toric code dimension must be at least 1, got {k}")
    if d < 2:
        raise DimensionError(f"Toric code distance must be at least 2, got {d}")


def _vertex_index(a: Tuple[int, ...], d: int) -> int:
    index = 0
    for coordinate in a:
        index = index * d + coordinate
    return index


def _edge(i: int, a: Tuple[int, ...], d: int, k: int) -> int:
    return i * d ** k + _vertex_index(tuple(coordinate % d for coordinate in a), d)


def toric_code(k: int, d: int) -> CssCode:
    """
    Every edge of the periodic lattice carries a qubit, so n = k d^k: toric_code(2, 2) is [[8,2,2]]
    and toric_code(3, 2) is [[24,3,2]]. The [[4,2,2]] and [[8,3,2]] codes come out of
    ConstructionEngine.construct_code at d = 2 for the targets CZ and CCZ.

    Returns:
        CssCode with n = k d^k and k logical qubits, X-logical i being the direction-i cut
    """
    _check(k, d)
    n = k * d ** k
    stars = []
    for a in product(range(d), repeat=k):
        row = np.zeros(n, dtype=np.int64)
        for i in range(k):
            shifted = list(a)
            shifted[i] += 1
            row[_edge(i, a, d, k)] ^= 1
            row[_edge(i, tuple(shifted), d, k)] ^= 1
        stars.append(row)
    stars = np.array(stars, dtype=np.int64)
    SX = stars[independent_row_indices(ZnMatrix(2, stars, n))]

    LX = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        for a in product(range(d), repeat=k):
            if a[i] == d - 1:
                LX[i, _edge(i, a, d, k)] = 1
    code = build_code(SX, LX)
    logger.debug("Toric code k=%d d=%d: %r", k, d, code)
    return code


def toric_logical_z(k: int, d: int) -> np.ndarray:
    """
    Binary k x n matrix of the Z-logicals: row i is the direction-i line through the origin,
    weight d, with LZ.LX^T = I and LZ.SX^T = 0
    """
    _check(k, d)
    n = k * d ** k
    LZ = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        for step in range(d):
            a = [0] * k
            a[i] = step
            LZ[i, _edge(i, tuple(a), d, k)] = 1
    return LZ
