"""
xpcalc - Code Distances
Exact X and Z distances by brute force, under a size cap.

dX is the minimum weight of x with SZ.x = 0 and LZ.x != 0 (a nontrivial logical X), dZ the minimum
weight of z with SX.z = 0 and LX.z != 0. Two exact strategies are tried, cheapest first:
enumerating the cosets of the stabiliser span, or enumerating vectors by increasing weight.
Beyond the cap the distance is reported as None, never guessed.
"""

import logging
from itertools import combinations, islice
from math import comb
from typing import Optional

import numpy as np

from codes.code_builder import logical_z_matrix
from models import CodeDistances, CssCode

logger = logging.getLogger(__name__)

DEFAULT_DISTANCE_CAP = 1 << 22
CHUNK = 1 << 16


def _span_mod2(rows: np.ndarray, n: int) -> np.ndarray:
    """All 2^m combinations of the rows, as a uint8 matrix"""
    span = np.zeros((1, n), dtype=np.uint8)
    for row in rows.astype(np.uint8):
        span = np.vstack([span, span ^ row])
    return span


def _coset_distance(stabilisers: np.ndarray, logicals: np.ndarray, n: int) -> int:
    span = _span_mod2(stabilisers, n)
    offsets = _span_mod2(logicals, n)[1:]
    best = n
    for offset in offsets:
        best = min(best, int((span ^ offset).sum(axis=1).min()))
    return best


def _weight_distance(checks: np.ndarray, detectors: np.ndarray, n: int, cap: int) -> Optional[int]:
    """
    Smallest weight w with a vector orthogonal to all checks but not to all detectors,
    trying weights in increasing order while the number of candidates stays under the cap
    """
    tried = 0
    for weight in range(1, n + 1):
        tried += comb(n, weight)
        if tried > cap:
            return None
        supports = combinations(range(n), weight)
        while True:
            chunk = np.array(list(islice(supports, CHUNK)), dtype=np.int64)
            if not chunk.size:
                break
            vectors = np.zeros((len(chunk), n), dtype=np.int64)
            np.put_along_axis(vectors, chunk.reshape(len(chunk), weight), 1, axis=1)
            passes = ~((vectors @ checks.T) % 2).any(axis=1) if checks.size else np.ones(len(vectors), dtype=bool)
            detects = ((vectors @ detectors.T) % 2).any(axis=1)
            if (passes & detects).any():
                return weight
    return None


def _distance(stabilisers: np.ndarray, logicals: np.ndarray, checks: np.ndarray, detectors: np.ndarray,
              n: int, cap: int) -> Optional[int]:
    if logicals.shape[0] == 0:
        return None
    generators = stabilisers.shape[0] + logicals.shape[0]
    # coset table holds 2^r rows of n bytes
    if generators < 63 and (1 << generators) * n <= 8 * cap:
        return _coset_distance(stabilisers, logicals, n)
    return _weight_distance(checks, detectors, n, cap)


def code_distances(code: CssCode, cap: int = DEFAULT_DISTANCE_CAP) -> CodeDistances:
    """
    Returns:
        CodeDistances(dX, dZ), each None when not computable under the cap (or when k = 0)
    """
    LZ = logical_z_matrix(code)
    dX = _distance(code.SX, code.LX, code.SZ, LZ, code.n, cap)
    dZ = _distance(code.SZ, LZ, code.SX, code.LX, code.n, cap)
    if dX is None or dZ is None:
        logger.warning("Distance of %r not computed under cap %d (dX=%s, dZ=%s)", code, cap, dX, dZ)
    return CodeDistances(dX, dZ)
