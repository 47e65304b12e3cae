"""
xpcalc - Z_N Matrix Model
ZnMatrix holds a matrix over the ring Z_N for N a power of two (N = 2 included).
It carries the matrices of the logical operator algorithms: E_M, K_M, K_L, E_B, K_B and the commutant blocks.

The class only holds data and checks its own invariants, the row reduction lives in ringalg.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

import numpy as np

from models.errors import CodeFormatError, DimensionError


def is_power_of_two(value: int) -> bool:
    """True for 2, 4, 8, ... (1 is not a valid modulus here)"""
    return value >= 2 and (value & (value - 1)) == 0


def format_residues(vector: Sequence[int], modulus: int) -> str:
    """
    Render a vector of residues the way the reports print them:
    digit strings such as 13313113 while every residue fits in one digit, comma separated otherwise
    """
    values = [int(value) for value in vector]
    if modulus <= 10:
        return "".join(str(value) for value in values)
    return ",".join(str(value) for value in values)


def parse_residues(text: str, modulus: int, length: Optional[int] = None) -> np.ndarray:
    """Inverse of format_residues, values are reduced mod the modulus"""
    text = text.strip()
    if "," in text:
        parts = [part.strip() for part in text.split(",")]
    else:
        parts = list(text)
    if not parts or not all(part.isdigit() for part in parts):
        raise CodeFormatError(f"Not a residue vector: '{text}'")
    vector = np.array([int(part) for part in parts], dtype=np.int64) % modulus
    if length is not None and len(vector) != length:
        raise DimensionError(f"Expected {length} entries, got {len(vector)} in '{text}'")
    return vector


@dataclass(frozen=True, eq=False)
class ZnMatrix:
    """
    Matrix over Z_N, stored as a 2D int64 numpy array with every entry in [0, N)

        modulus: N, a power of two
        rows: array of shape (m, ncols)
        ncols: column count (kept explicitly so empty matrices still know their width)
        howell: True when the rows are known to be in Howell form
    """

    modulus: int
    rows: np.ndarray
    ncols: int
    howell: bool = False

    def __post_init__(self):
        if not is_power_of_two(self.modulus):
            raise DimensionError(f"Modulus must be a power of two, got {self.modulus}")
        rows = np.asarray(self.rows, dtype=np.int64)
        if rows.size == 0:
            rows = np.zeros((0, self.ncols), dtype=np.int64)
        if rows.ndim != 2 or rows.shape[1] != self.ncols:
            raise DimensionError(f"Rows of shape {rows.shape} do not have {self.ncols} columns")
        rows = rows % self.modulus
        rows.setflags(write=False)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], modulus: int, ncols: Optional[int] = None) -> "ZnMatrix":
        """Build from any iterable of vectors, ncols is only needed when there are no rows"""
        try:
            array = np.array([list(row) for row in rows], dtype=np.int64)
        except ValueError as err:
            raise DimensionError("Rows have inconsistent lengths") from err
        if array.size == 0:
            if ncols is None:
                raise DimensionError("Column count required for an empty matrix")
            return cls(modulus, np.zeros((0, ncols), dtype=np.int64), ncols)
        if array.ndim != 2:
            raise DimensionError("Rows have inconsistent lengths")
        return cls(modulus, array, array.shape[1])

    @classmethod
    def empty(cls, modulus: int, ncols: int) -> "ZnMatrix":
        """Matrix with no rows, its span is the zero module"""
        return cls(modulus, np.zeros((0, ncols), dtype=np.int64), ncols, howell=True)

    @classmethod
    def identity(cls, modulus: int, size: int) -> "ZnMatrix":
        return cls(modulus, np.eye(size, dtype=np.int64), size, howell=True)

    @property
    def nrows(self) -> int:
        return self.rows.shape[0]

    def __len__(self) -> int:
        return self.nrows

    def __iter__(self):
        return iter(self.rows)

    def is_empty(self) -> bool:
        return self.nrows == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZnMatrix):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.ncols == other.ncols
            and self.rows.shape == other.rows.shape
            and bool(np.array_equal(self.rows, other.rows))
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.ncols, self.rows.tobytes()))

    def stack(self, other: "ZnMatrix") -> "ZnMatrix":
        """Rows of self followed by rows of other"""
        if other.modulus != self.modulus or other.ncols != self.ncols:
            raise DimensionError("Cannot stack matrices with different modulus or width")
        return ZnMatrix(self.modulus, np.vstack([self.rows, other.rows]), self.ncols)

    def lift(self, modulus: int) -> "ZnMatrix":
        """
        Embed into a larger power-of-two modulus by scaling, so that a level t-1 matrix mod 2^(t-1)
        becomes the matching submodule mod 2^t
        """
        if modulus % self.modulus != 0:
            raise DimensionError(f"Cannot lift mod {self.modulus} to mod {modulus}")
        factor = modulus // self.modulus
        return ZnMatrix(modulus, self.rows * factor, self.ncols, howell=self.howell)

    def with_modulus(self, modulus: int) -> "ZnMatrix":
        """Same integer entries read mod another modulus (used to view binary matrices mod N)"""
        return ZnMatrix(modulus, self.rows, self.ncols)

    def permute_columns(self, order: Sequence[int]) -> "ZnMatrix":
        """New matrix whose column j is column order[j] of this one"""
        return ZnMatrix(self.modulus, self.rows[:, list(order)], self.ncols)

    def to_strings(self) -> List[str]:
        return [format_residues(row, self.modulus) for row in self.rows]

    def to_dict(self) -> dict:
        """Convert to a dictionary for the JSON reports"""
        return {
            "modulus": self.modulus,
            "ncols": self.ncols,
            "rows": self.to_strings(),
        }
