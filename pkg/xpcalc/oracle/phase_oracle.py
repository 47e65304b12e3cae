"""
xpcalc - Brute-Force Phase Oracle
Independent check of diagonal logical operators by direct enumeration.

A diagonal operator B is logical on a CSS code exactly when, for every v, B applies the same phase
to every basis string e_uv = u.SX + v.LX of |v>_L. The phase on |v>_L then gives the logical action.

Nothing here calls the Z_N linear algebra or the logical operator algorithms: codewords are
enumerated with plain integer bitmasks and phases are evaluated term by term, so a bug in the
algorithms cannot hide behind the same bug in the oracle.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, Sequence, Tuple

from models import (
    CapExceededError,
    CheckOutcome,
    CheckResult,
    CpOp,
    CssCode,
    DiagProduct,
    DimensionError,
    GateKind,
    XpOp,
)

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_CAP = 16

Bits = Tuple[int, ...]


@dataclass(frozen=True)
class PhaseFn:
    """
    Exact diagonal operator: bit vector of length n -> exponent of w = exp(i pi / N) in Z_2N
    """

    N: int
    n: int
    evaluator: Callable[[Bits], int]

    def __call__(self, e: Sequence[int]) -> int:
        bits = tuple(int(bit) for bit in e)
        if len(bits) != self.n:
            raise DimensionError(f"Phase function on {self.n} qubits applied to {len(bits)} bits")
        return self.evaluator(bits) % (2 * self.N)

    def then(self, other: "PhaseFn") -> "PhaseFn":
        """Product of two diagonal operators: exponents add"""
        if other.N != self.N or other.n != self.n:
            raise DimensionError("Cannot compose phase functions of different precision or length")
        return PhaseFn(self.N, self.n, lambda e: self.evaluator(e) + other.evaluator(e))

    def inverse(self) -> "PhaseFn":
        return PhaseFn(self.N, self.n, lambda e: -self.evaluator(e))

    @classmethod
    def zero(cls, N: int, n: int) -> "PhaseFn":
        return cls(N, n, lambda e: 0)

    @classmethod
    def from_xp(cls, op: XpOp) -> "PhaseFn":
        """XP_N(p|0|z): phase p + 2 e.z"""
        if op.x.any():
            raise DimensionError("Only diagonal XP operators have a phase function")
        p = op.p
        z = [int(value) for value in op.z]
        return cls(op.N, op.n, lambda e: p + 2 * sum(zi for zi, bit in zip(z, e) if bit))

    def table(self) -> Dict[Bits, int]:
        """Full phase table over Z_2^n (small n only)"""
        return {e: self(e) for e in product((0, 1), repeat=self.n)}


def phase_of_product(terms: DiagProduct) -> PhaseFn:
    """
    Phase function of a CP or RP product: the sum of q over the CP terms whose support is contained
    in e (or the RP terms with odd overlap), plus the global phase
    """
    supports = [(term.q, term.support) for term in terms.terms]
    phase = terms.phase
    if terms.kind == GateKind.CP:
        def evaluate(e: Bits) -> int:
            return phase + sum(q for q, support in supports if all(e[i] for i in support))
    else:
        def evaluate(e: Bits) -> int:
            return phase + sum(q for q, support in supports if sum(e[i] for i in support) % 2)
    return PhaseFn(terms.N, terms.n, evaluate)


def _row_masks(rows) -> list:
    masks = []
    for row in rows:
        mask = 0
        for bit in row:
            mask = (mask << 1) | int(bit)
        masks.append(mask)
    return masks


def _mask_bits(mask: int, n: int) -> Bits:
    return tuple((mask >> (n - 1 - i)) & 1 for i in range(n))


def _combine(masks: list, selection: Sequence[int]) -> int:
    value = 0
    for mask, bit in zip(masks, selection):
        if bit:
            value ^= mask
    return value


def _mobius_action(phases: Dict[Bits, int], N: int, k: int) -> DiagProduct:
    """CP product on k qubits whose phase on every |v> is phases[v]"""
    terms = []
    for v in phases:
        if not any(v):
            continue
        support = [i for i, bit in enumerate(v) if bit]
        q = 0
        for w in product((0, 1), repeat=len(support)):
            below = [0] * k
            for i, bit in zip(support, w):
                below[i] = bit
            q += (-1) ** (len(support) - sum(w)) * phases[tuple(below)]
        terms.append(CpOp(N, q, v))
    return DiagProduct(N, k, GateKind.CP, tuple(terms), phases[(0,) * k])


def check_logical(code: CssCode, op: PhaseFn, cap: int = DEFAULT_ORACLE_CAP) -> CheckResult:
    """
    Classify a diagonal operator on a CSS code by enumerating all 2^(r+k) strings e_uv.

    Returns:
        CheckResult with IDENTITY (all phases 0), LOGICAL with the recovered action, or
        NOT_LOGICAL with a witness pair from one codeword whose phases differ
    """
    if op.n != code.n:
        raise DimensionError(f"Operator on {op.n} qubits, code has {code.n}")
    r, k, n = code.r, code.k, code.n
    if r + k > cap:
        raise CapExceededError(f"Oracle enumeration of 2^{r + k} strings exceeds cap 2^{cap}")

    sx_masks = _row_masks(code.SX)
    lx_masks = _row_masks(code.LX)
    phases: Dict[Bits, int] = {}
    for v in product((0, 1), repeat=k):
        offset = _combine(lx_masks, v)
        first_e, first_phase = None, None
        for u in product((0, 1), repeat=r):
            e = _mask_bits(offset ^ _combine(sx_masks, u), n)
            phase = op(e)
            if first_e is None:
                first_e, first_phase = e, phase
            elif phase != first_phase:
                logger.debug("Phase differs inside codeword v=%s: %s vs %s", v, first_e, e)
                return CheckResult(CheckOutcome.NOT_LOGICAL, witness=(first_e, e))
        phases[v] = first_phase

    action = _mobius_action(phases, op.N, k)
    if not any(phases.values()):
        return CheckResult(CheckOutcome.IDENTITY, action=action)
    return CheckResult(CheckOutcome.LOGICAL, action=action)


def same_phase_function(a: PhaseFn, b: PhaseFn) -> bool:
    """Exhaustive equality of two phase functions over Z_2^n"""
    if a.N != b.N or a.n != b.n:
        return False
    return all(a(e) == b(e) for e in product((0, 1), repeat=a.n))
