"""
xpcalc - CSS Code Model
A CSS code is given by its X-checks SX and X-logicals LX; the Z-checks SZ are derived from them.
This class only holds the matrices, building and validating them is done in codes.code_builder.
"""

import hashlib
from dataclasses import dataclass
from typing import Tuple

import numpy as np


def bits_to_string(bits) -> str:
    return "".join(str(int(bit)) for bit in bits)


@dataclass(frozen=True, eq=False)
class CssCode:
    """
    Immutable CSS code on n qubits

        n: physical qubit count
        SX: binary r x n matrix of X-checks
        LX: binary k x n matrix of X-logicals, row i is logical qubit i
        SZ: binary matrix of Z-checks, the canonical mod-2 kernel of (SX; LX)
    """

    n: int
    SX: np.ndarray
    LX: np.ndarray
    SZ: np.ndarray

    def __post_init__(self):
        for name in ("SX", "LX", "SZ"):
            matrix = np.asarray(getattr(self, name), dtype=np.int64).reshape(-1, self.n) % 2
            matrix.setflags(write=False)
            object.__setattr__(self, name, matrix)

    @property
    def r(self) -> int:
        return self.SX.shape[0]

    @property
    def k(self) -> int:
        return self.LX.shape[0]

    @property
    def parameters(self) -> Tuple[int, int]:
        return self.n, self.k

    def fingerprint(self) -> str:
        """Stable identifier used to cache per-code results"""
        digest = hashlib.sha1()
        digest.update(str(self.n).encode())
        digest.update(self.SX.tobytes())
        digest.update(b"|")
        digest.update(self.LX.tobytes())
        return digest.hexdigest()[:16]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CssCode):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.SX, other.SX)
            and np.array_equal(self.LX, other.LX)
        )

    def __hash__(self) -> int:
        return hash(self.fingerprint())

    def __repr__(self) -> str:
        return f"CssCode(n={self.n}, r={self.r}, k={self.k})"

    def to_dict(self) -> dict:
        """Convert code to dictionary for JSON serialization"""
        return {
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "SX": [bits_to_string(row) for row in self.SX],
            "LX": [bits_to_string(row) for row in self.LX],
            "SZ": [bits_to_string(row) for row in self.SZ],
        }


@dataclass(frozen=True)
class CodewordIndex:
    """
    One basis string e = u.SX + v.LX (mod 2) of the canonical codewords, with the (u, v) it came from
    """

    u: Tuple[int, ...]
    v: Tuple[int, ...]
    e: Tuple[int, ...]

    @property
    def weight(self) -> int:
        """wt(u) + wt(v), the quantity used for weight truncation"""
        return sum(self.u) + sum(self.v)
