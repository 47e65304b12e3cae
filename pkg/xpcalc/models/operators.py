"""
xpcalc - Operator Models
Vector forms of the operators the toolkit manipulates:
- XpOp: precision-N XP operator w^p X^x P^z with w = exp(i pi / N) and P = diag(1, w^2)
- CpOp: controlled-phase gate CP_N(q, v), phase w^q on basis states containing supp(v)
- RpOp: phase-rotation gate RP_N(q, v), phase w^q on basis states with odd overlap with v
- DiagProduct: product of CP terms or of RP terms, kept in canonical form

Phases are integer exponents of w in Z_2N, there is no floating point in these types.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from models.errors import CodeFormatError, DimensionError
from models.zn_matrix import format_residues, is_power_of_two, parse_residues


def _check_precision(N: int):
    if not is_power_of_two(N):
        raise DimensionError(f"Precision must be a power of two, got {N}")


def as_bits(v: Iterable[int]) -> Tuple[int, ...]:
    return tuple(int(bit) % 2 for bit in v)


def support_of(v: Sequence[int]) -> Tuple[int, ...]:
    return tuple(i for i, bit in enumerate(v) if bit)


def indicator(support: Iterable[int], n: int) -> Tuple[int, ...]:
    """Bit vector of length n with ones on the given positions"""
    bits = [0] * n
    for i in support:
        if not 0 <= i < n:
            raise DimensionError(f"Qubit {i} out of range for {n} qubits")
        bits[i] = 1
    return tuple(bits)


@dataclass(frozen=True, eq=False)
class XpOp:
    """
    XP operator in vector form (p|x|z) at precision N

        N: precision, a power of two
        p: phase exponent in Z_2N
        x: bit vector, the X component
        z: vector of residues mod N, the P component
    """

    N: int
    p: int
    x: np.ndarray
    z: np.ndarray

    def __post_init__(self):
        _check_precision(self.N)
        x = np.asarray(self.x, dtype=np.int64) % 2
        z = np.asarray(self.z, dtype=np.int64) % self.N
        if x.ndim != 1 or z.ndim != 1 or len(x) != len(z):
            raise DimensionError("X and Z components must be vectors of equal length")
        x.setflags(write=False)
        z.setflags(write=False)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "p", int(self.p) % (2 * self.N))

    @classmethod
    def diagonal(cls, N: int, z: Sequence[int], p: int = 0) -> "XpOp":
        z = np.asarray(z, dtype=np.int64)
        return cls(N, p, np.zeros(len(z), dtype=np.int64), z)

    @classmethod
    def x_string(cls, N: int, x: Sequence[int], p: int = 0) -> "XpOp":
        x = np.asarray(x, dtype=np.int64)
        return cls(N, p, x, np.zeros(len(x), dtype=np.int64))

    @property
    def n(self) -> int:
        return len(self.x)

    def is_diagonal(self) -> bool:
        return not self.x.any()

    def _check_compatible(self, other: "XpOp"):
        if other.N != self.N or other.n != self.n:
            raise DimensionError("XP operators differ in precision or length")

    def multiply(self, other: "XpOp") -> "XpOp":
        """
        self * other, using P^a X = w^(2a) X P^(-a):
        XP(p1|x1|z1) XP(p2|x2|z2) = XP(p1 + p2 + 2 x2.z1 | x1 + x2 | z1 (1 - 2 x2) + z2)
        """
        self._check_compatible(other)
        p = self.p + other.p + 2 * int(other.x @ self.z)
        x = (self.x + other.x) % 2
        z = self.z * (1 - 2 * other.x) + other.z
        return XpOp(self.N, p, x, z)

    def inverse(self) -> "XpOp":
        p = -self.p - 2 * int(self.x @ self.z)
        z = self.z * (2 * self.x - 1)
        return XpOp(self.N, p, self.x, z)

    def __eq__(self, other) -> bool:
        if not isinstance(other, XpOp):
            return NotImplemented
        return (
            self.N == other.N
            and self.p == other.p
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.z, other.z)
        )

    def __hash__(self) -> int:
        return hash((self.N, self.p, self.x.tobytes(), self.z.tobytes()))

    def to_string(self) -> str:
        """Printed as XP_N(p|x|z) with x and z as digit strings"""
        x = "".join(str(int(bit)) for bit in self.x)
        return f"XP_{self.N}({self.p}|{x}|{format_residues(self.z, self.N)})"

    __str__ = to_string

    @classmethod
    def parse(cls, text: str) -> "XpOp":
        text = text.strip()
        try:
            head, body = text.split("(", 1)
            N = int(head.strip().upper().replace("XP_", "").replace("XP", ""))
            p_text, x_text, z_text = body.rstrip(")").split("|")
        except ValueError as err:
            raise CodeFormatError(f"Not an XP operator: '{text}'") from err
        x = parse_residues(x_text, 2)
        z = parse_residues(z_text, N, length=len(x))
        return cls(N, int(p_text), x, z)

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "p": self.p,
            "x": "".join(str(int(bit)) for bit in self.x),
            "z": format_residues(self.z, self.N),
        }


@dataclass(frozen=True)
class CpOp:
    """CP_N(q, v): phase w^q on |e> when supp(v) is contained in supp(e)"""

    N: int
    q: int
    v: Tuple[int, ...]

    def __post_init__(self):
        _check_precision(self.N)
        object.__setattr__(self, "q", int(self.q) % (2 * self.N))
        object.__setattr__(self, "v", as_bits(self.v))

    @property
    def support(self) -> Tuple[int, ...]:
        return support_of(self.v)

    @property
    def weight(self) -> int:
        return sum(self.v)


@dataclass(frozen=True)
class RpOp:
    """RP_N(q, v): phase w^q on |e> when e.v is odd"""

    N: int
    q: int
    v: Tuple[int, ...]

    def __post_init__(self):
        _check_precision(self.N)
        object.__setattr__(self, "q", int(self.q) % (2 * self.N))
        object.__setattr__(self, "v", as_bits(self.v))

    @property
    def support(self) -> Tuple[int, ...]:
        return support_of(self.v)

    @property
    def weight(self) -> int:
        return sum(self.v)


Term = Union[CpOp, RpOp]


class GateKind(Enum):
    """Which generating set a DiagProduct is written in"""
    CP = "CP"
    RP = "RP"


def _term_key(term: Term):
    return term.weight, term.support


@dataclass(frozen=True)
class DiagProduct:
    """
    Product of diagonal gates of one kind, times a global phase w^phase

        N: precision shared by all terms
        n: qubit count shared by all terms
        kind: GateKind.CP or GateKind.RP
        terms: canonical tuple, one term per support, no zero coefficients,
               ordered by weight and then by support
        phase: global phase exponent in Z_2N

    The canonical form is applied on construction, so equal products compare equal.
    """

    N: int
    n: int
    kind: GateKind
    terms: Tuple[Term, ...] = field(default=())
    phase: int = 0

    def __post_init__(self):
        _check_precision(self.N)
        term_type = CpOp if self.kind == GateKind.CP else RpOp
        merged = {}
        for term in self.terms:
            if not isinstance(term, term_type):
                raise DimensionError(f"{type(term).__name__} in a {self.kind.value} product")
            if term.N != self.N or len(term.v) != self.n:
                raise DimensionError("Terms of a product must share precision and length")
            merged[term.v] = (merged.get(term.v, 0) + term.q) % (2 * self.N)
        terms = tuple(sorted(
            (term_type(self.N, q, v) for v, q in merged.items() if q != 0),
            key=_term_key,
        ))
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "phase", int(self.phase) % (2 * self.N))

    @classmethod
    def identity(cls, N: int, n: int, kind: GateKind = GateKind.CP) -> "DiagProduct":
        return cls(N, n, kind)

    @classmethod
    def of(cls, N: int, n: int, kind: GateKind, pairs: Iterable[Tuple[int, Iterable[int]]], phase: int = 0) -> "DiagProduct":
        """Build from (q, support) pairs, e.g. DiagProduct.of(8, 3, GateKind.CP, [(8, [0, 1, 2])])"""
        term_type = CpOp if kind == GateKind.CP else RpOp
        terms = tuple(term_type(N, q, indicator(support, n)) for q, support in pairs)
        return cls(N, n, kind, terms, phase)

    def is_identity(self) -> bool:
        return not self.terms and self.phase == 0

    def coefficient(self, support: Iterable[int]) -> int:
        """q of the term on this support, 0 when absent"""
        v = indicator(support, self.n)
        for term in self.terms:
            if term.v == v:
                return term.q
        return 0

    def compose(self, other: "DiagProduct") -> "DiagProduct":
        """Product of two products of the same kind (diagonal gates commute)"""
        if other.N != self.N or other.n != self.n or other.kind != self.kind:
            raise DimensionError("Cannot compose products of different precision, length or kind")
        return DiagProduct(self.N, self.n, self.kind, self.terms + other.terms, self.phase + other.phase)

    def scale(self, factor: int) -> "DiagProduct":
        """The product raised to an integer power"""
        term_type = CpOp if self.kind == GateKind.CP else RpOp
        terms = tuple(term_type(self.N, term.q * factor, term.v) for term in self.terms)
        return DiagProduct(self.N, self.n, self.kind, terms, self.phase * factor)

    def rescale(self, N: int) -> "DiagProduct":
        """
        The same operator written at precision N: exponents scale by N / self.N.
        Going down in precision requires every exponent to be divisible.
        """
        _check_precision(N)
        term_type = CpOp if self.kind == GateKind.CP else RpOp
        if N >= self.N:
            factor = N // self.N
            terms = tuple(term_type(N, term.q * factor, term.v) for term in self.terms)
            return DiagProduct(N, self.n, self.kind, terms, self.phase * factor)
        divisor = self.N // N
        if any(term.q % divisor for term in self.terms) or self.phase % divisor:
            raise DimensionError(f"Product is not representable at precision {N}")
        terms = tuple(term_type(N, term.q // divisor, term.v) for term in self.terms)
        return DiagProduct(N, self.n, self.kind, terms, self.phase // divisor)

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "n": self.n,
            "kind": self.kind.value,
            "phase": self.phase,
            "terms": [{"q": term.q, "support": list(term.support)} for term in self.terms],
        }

