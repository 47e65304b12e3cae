"""
xpcalc - Diagonal Operator Calculus
XP operator action, the diagonal commutator, Clifford levels, CP/RP phase functions,
the CP <-> RP duality and conjugation of CP/RP gates by X strings.

Conventions: w = exp(i pi / N), phases are exponents of w in Z_2N.
    CP_N(q, v)|e> = w^(q p_v(e))|e>   with p_v(e) = prod_{i in v} e_i
    RP_N(q, v)|e> = w^(q s_v(e))|e>   with s_v(e) = parity of e.v
The duality rests on two integer identities over the subsets u of v:
    s_v = sum_u (-2)^(|u|-1) p_u        2^(|v|-1) p_v = sum_u (-1)^(|u|-1) s_u
"""

import logging
from itertools import combinations
from math import gcd
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from models import CpOp, DiagProduct, DimensionError, GateKind, RpOp, XpOp, indicator

logger = logging.getLogger(__name__)


def _bits(e: Sequence[int], n: int) -> np.ndarray:
    vector = np.asarray(e, dtype=np.int64) % 2
    if vector.ndim != 1 or len(vector) != n:
        raise DimensionError(f"Bit vector of length {len(vector)} for an operator on {n} qubits")
    return vector


def log2(value: int) -> int:
    return value.bit_length() - 1


def nonzero_subsets(support: Sequence[int]) -> Iterable[Tuple[int, ...]]:
    """Nonempty subsets of a support, by size and then lexicographically"""
    for size in range(1, len(support) + 1):
        yield from combinations(support, size)


# ============================================================================
# XP operators
# ============================================================================

def xp_apply(op: XpOp, e: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """
    XP_N(p|x|z)|e> = w^(p + 2 e.z)|e + x>

    Returns:
        (phase exponent mod 2N, resulting bit vector)
    """
    bits = _bits(e, op.n)
    phase = (op.p + 2 * int(bits @ op.z)) % (2 * op.N)
    return phase, tuple(int(bit) for bit in (bits + op.x) % 2)


def xp_diag_commutator(x: Sequence[int], z: Sequence[int], N: int) -> XpOp:
    """
    Group commutator A B A^-1 B^-1 of A = XP_N(0|x|0) and B = XP_N(0|0|z):
    XP_N(2 x.z | 0 | -2 x z)
    """
    x_bits = np.asarray(x, dtype=np.int64) % 2
    z_vec = np.asarray(z, dtype=np.int64) % N
    if len(x_bits) != len(z_vec):
        raise DimensionError("Commutator needs x and z of equal length")
    return XpOp.diagonal(N, (-2 * x_bits * z_vec) % N, p=2 * int(x_bits @ z_vec))


def clifford_level(op: XpOp) -> int:
    """
    Level t - log2(g) of a diagonal XP_N(0|0|z), N = 2^t, with g = gcd(N, z).
    The global phase does not change the level; the identity has level 0.
    """
    if not op.is_diagonal():
        raise DimensionError("Clifford level is only defined here for diagonal operators")
    g = op.N
    for value in op.z:
        g = gcd(g, int(value))
    return log2(op.N) - log2(g)


# ============================================================================
# CP / RP phase functions
# ============================================================================

def cp_phase(op: CpOp, e: Sequence[int]) -> int:
    bits = _bits(e, len(op.v))
    return op.q if all(bits[i] for i in op.support) else 0


def rp_phase(op: RpOp, e: Sequence[int]) -> int:
    bits = _bits(e, len(op.v))
    return op.q if int(bits @ np.array(op.v)) % 2 else 0


def product_phase(product: DiagProduct, e: Sequence[int]) -> int:
    """Phase exponent of a whole product on |e>, global phase included"""
    evaluate = cp_phase if product.kind == GateKind.CP else rp_phase
    return (product.phase + sum(evaluate(term, e) for term in product.terms)) % (2 * product.N)


def cp_term_level(term: CpOp) -> int:
    """
    Level of CP_N(q, v): the phase exp(2 pi i q / 2N) has order 2^m, and a controlled
    phase of order 2^m on w qubits sits at level m + w - 1
    """
    order = (2 * term.N) // gcd(term.q, 2 * term.N)
    return log2(order) + term.weight - 1


def product_level(product: DiagProduct) -> int:
    """Highest Clifford level among the terms (RP products are expanded to CP first)"""
    cp = to_cp(product) if product.kind == GateKind.RP else product
    return max((cp_term_level(term) for term in cp.terms), default=0)


# ============================================================================
# Duality
# ============================================================================

def rp_to_cp(term: RpOp) -> DiagProduct:
    """RP_N(q, v) = prod_{0 != u <= v} CP_N(q (-2)^(|u|-1), u)"""
    n = len(term.v)
    terms = [
        CpOp(term.N, term.q * (-2) ** (len(u) - 1), indicator(u, n))
        for u in nonzero_subsets(term.support)
    ]
    return DiagProduct(term.N, n, GateKind.CP, tuple(terms))


def cp_to_rp(term: CpOp, allow_rescale: bool = False) -> DiagProduct:
    """
    CP_N(q, v) = prod_{0 != u <= v} RP_N(c (-1)^(|u|-1), u) with c = q / 2^(|v|-1).

    When q is not divisible by 2^(|v|-1) the expansion does not exist at precision N; with
    allow_rescale the result is written at the smallest higher precision where it does.
    """
    n = len(term.v)
    N, q = term.N, term.q
    divisor = 1 << max(term.weight - 1, 0)
    while q % divisor:
        if not allow_rescale:
            raise DimensionError(
                f"CP coefficient {term.q} is not a multiple of {divisor} at precision {term.N}"
            )
        N, q = 2 * N, 2 * q
    c = q // divisor
    terms = [RpOp(N, c * (-1) ** (len(u) - 1), indicator(u, n)) for u in nonzero_subsets(term.support)]
    return DiagProduct(N, n, GateKind.RP, tuple(terms))


def to_cp(product: DiagProduct) -> DiagProduct:
    """Rewrite any product as CP terms"""
    if product.kind == GateKind.CP:
        return product
    result = DiagProduct(product.N, product.n, GateKind.CP, phase=product.phase)
    for term in product.terms:
        result = result.compose(rp_to_cp(term))
    return result


def to_rp(product: DiagProduct, allow_rescale: bool = False) -> DiagProduct:
    """Rewrite any product as RP terms, at a higher precision if allow_rescale requires it"""
    if product.kind == GateKind.RP:
        return product
    parts: List[DiagProduct] = [cp_to_rp(term, allow_rescale) for term in product.terms]
    N = max([product.N] + [part.N for part in parts])
    result = DiagProduct(product.N, product.n, GateKind.RP, phase=product.phase).rescale(N)
    for part in parts:
        result = result.compose(part.rescale(N))
    return result


# ============================================================================
# Conjugation by X strings
# ============================================================================

def conjugate_cp_by_xstring(op: CpOp, x: Sequence[int]) -> DiagProduct:
    """
    X^x CP_N(q, v) X^x as a CP product:
    prod_{u <= x v} CP_N(q (-1)^(wt(xv) + wt(u)), v + u)
    The u = xv = v term (v inside x) is a global phase.
    """
    n = len(op.v)
    x_bits = _bits(x, n)
    v = np.array(op.v, dtype=np.int64)
    overlap = [i for i in op.support if x_bits[i]]
    terms = []
    phase = 0
    for size in range(len(overlap) + 1):
        for u in combinations(overlap, size):
            sign = (-1) ** (len(overlap) + size)
            target = v.copy()
            target[list(u)] ^= 1
            if target.any():
                terms.append(CpOp(op.N, op.q * sign, target))
            else:
                phase += op.q * sign
    return DiagProduct(op.N, n, GateKind.CP, tuple(terms), phase)


def conjugate_rp_by_xstring(op: RpOp, x: Sequence[int]) -> Tuple[int, RpOp]:
    """
    X^x RP_N(q, v) X^x = w^(q (x.v mod 2)) RP_N(+-q, v), q negated when x.v is odd

    Returns:
        (global phase exponent, conjugated RP gate)
    """
    x_bits = _bits(x, len(op.v))
    if int(x_bits @ np.array(op.v)) % 2:
        return op.q, RpOp(op.N, -op.q, op.v)
    return 0, op


def conjugate_product_by_xstring(product: DiagProduct, x: Sequence[int]) -> DiagProduct:
    """X^x B X^x for a whole product, in the product's own kind"""
    if product.kind == GateKind.CP:
        result = DiagProduct(product.N, product.n, GateKind.CP, phase=product.phase)
        for term in product.terms:
            result = result.compose(conjugate_cp_by_xstring(term, x))
        return result
    phase = product.phase
    terms = []
    for term in product.terms:
        extra, conjugated = conjugate_rp_by_xstring(term, x)
        phase += extra
        terms.append(conjugated)
    return DiagProduct(product.N, product.n, GateKind.RP, tuple(terms), phase)
