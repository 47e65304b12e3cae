"""
xpcalc - Pauli Stabiliser Code Model
A general (not necessarily CSS) stabiliser code, with each generator stored as a precision-2 XP operator.
At precision 2, w = i and P = Z, so a Pauli string with a Y picks up one unit of phase: Y = XP_2(1|1|1).
"""

from dataclasses import dataclass, field
from typing import List

import numpy as np

from models.errors import CodeFormatError, DimensionError
from models.operators import XpOp

SIGNS = {"": 0, "+": 0, "i": 1, "+i": 1, "-": 2, "-i": 3}
SIGN_TEXT = {0: "", 1: "i", 2: "-", 3: "-i"}


def parse_pauli(text: str) -> XpOp:
    """Pauli string with optional sign (+, -, i, -i) such as -XZZXI, to an XP_2 operator"""
    text = text.strip()
    body = text.lstrip("+-i")
    sign = text[: len(text) - len(body)]
    if sign not in SIGNS or not body:
        raise CodeFormatError(f"Not a Pauli string: '{text}'")
    x = np.zeros(len(body), dtype=np.int64)
    z = np.zeros(len(body), dtype=np.int64)
    p = SIGNS[sign]
    for i, letter in enumerate(body.upper()):
        if letter == "X":
            x[i] = 1
        elif letter == "Z":
            z[i] = 1
        elif letter == "Y":
            x[i] = z[i] = 1
            p += 1
        elif letter != "I":
            raise CodeFormatError(f"Unknown Pauli letter '{letter}' in '{text}'")
    return XpOp(2, p, x, z)


def format_pauli(op: XpOp) -> str:
    """Inverse of parse_pauli"""
    if op.N != 2:
        raise DimensionError("Only precision-2 operators are Pauli strings")
    letters = []
    y_count = 0
    for x_bit, z_bit in zip(op.x, op.z):
        if x_bit and z_bit:
            letters.append("Y")
            y_count += 1
        elif x_bit:
            letters.append("X")
        elif z_bit:
            letters.append("Z")
        else:
            letters.append("I")
    return SIGN_TEXT[(op.p - y_count) % 4] + "".join(letters)


@dataclass(frozen=True, eq=False)
class PauliStabCode:
    """
    Stabiliser code given by Pauli generators

        n: qubit count
        generators: XP_2 operators, pairwise commuting and independent (checked by noncss.canonicalise)
    """

    n: int
    generators: List[XpOp] = field(default_factory=list)

    def __post_init__(self):
        for op in self.generators:
            if op.N != 2 or op.n != self.n:
                raise DimensionError(f"Generator {op} is not a Pauli operator on {self.n} qubits")

    @classmethod
    def from_strings(cls, strings: List[str]) -> "PauliStabCode":
        generators = [parse_pauli(text) for text in strings]
        if not generators:
            raise CodeFormatError("No stabiliser generators given")
        n = generators[0].n
        return cls(n, generators)

    def to_strings(self) -> List[str]:
        return [format_pauli(op) for op in self.generators]

    def to_dict(self) -> dict:
        return {"n": self.n, "generators": self.to_strings()}
