"""
xpcalc - Logic Engine
Diagonal logical operators of a CSS code at level t of the Clifford hierarchy (precision N = 2^t):
- logical identities: z with e.z = 0 mod N on every codeword string e
- search by action: z whose phases on the codewords match a target CP product
- logical operator test: the group commutator with every X-check is a logical identity
- logical operator generators: the intersection of the commutants of the X-checks
- logical action: the CP product a diagonal logical operator applies to the logical qubits
"""

import logging
from itertools import combinations
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from codes import codeword_matrix, codeword_rows
from models import (
    CommutatorCheck,
    CpOp,
    CssCode,
    DiagProduct,
    DimensionError,
    GateKind,
    GeneratorRow,
    IdentityGenerators,
    LogicalGenerators,
    NotFound,
    NotLogicalError,
    XpOp,
    ZnMatrix,
)
from phaseops import product_level, product_phase, to_cp
from ringalg import howell, in_span, kernel, leading_index, span_intersection

logger = logging.getLogger(__name__)


def precision(t: int) -> int:
    if t < 1:
        raise DimensionError(f"Level must be at least 1, got {t}")
    return 1 << t


def level_of(N: int) -> int:
    return N.bit_length() - 1


def _z_vector(code: CssCode, z: Sequence[int], N: int) -> np.ndarray:
    vector = np.asarray(z, dtype=np.int64)
    if vector.ndim != 1 or len(vector) != code.n:
        raise DimensionError(f"z has {len(vector)} entries, code has {code.n} qubits")
    return vector % N


def _low_weight_vectors(k: int, t: int) -> List[Tuple[int, ...]]:
    """All v in Z_2^k with wt(v) <= t, by weight and then lexicographically by support"""
    vectors = []
    for weight in range(min(t, k) + 1):
        for support in combinations(range(k), weight):
            v = [0] * k
            for i in support:
                v[i] = 1
            vectors.append(tuple(v))
    return vectors


class LogicEngine:
    """
    Algorithms on the Z-components of diagonal XP operators

    All results are exact: matrices live over Z_N, phases are exponents of w = exp(i pi / N) mod 2N.
    Absence of an operator is returned as NotFound, inconsistent input raises.
    """

    @staticmethod
    def logical_identities(code: CssCode, t: int) -> IdentityGenerators:
        """
        Z-components of the diagonal logical identities at level t

        Returns:
            IdentityGenerators with K_M the Howell basis of ker E_M mod 2^t, where E_M holds the
            strings e_uv with wt(u) + wt(v) <= t
        """
        N = precision(t)
        E_M = codeword_matrix(code, t, N)
        K_M = kernel(E_M)
        logger.debug("K_M of %r at t=%d: %d rows from %d codeword strings", code, t, K_M.nrows, E_M.nrows)
        return IdentityGenerators(N, K_M)

    @staticmethod
    def identities_for_test(code: CssCode, t: int) -> ZnMatrix:
        """
        K_M used by the logical operator test at level t, written mod 2^t.
        The commutator of a level t operator sits at level t-1, so the level t-1 identities are
        lifted by doubling. At t = 2 these are the doubled Z-checks, at t = 1 nothing is needed.
        """
        N = precision(t)
        if t == 1:
            return ZnMatrix.empty(N, code.n)
        if t == 2:
            return ZnMatrix(2, code.SZ, code.n).lift(N)
        return LogicEngine.logical_identities(code, t - 1).K_M.lift(N)

    @staticmethod
    def _identities_at(code: CssCode, N: int, identities: Optional[Union[IdentityGenerators, ZnMatrix]]) -> ZnMatrix:
        if identities is None:
            return LogicEngine.identities_for_test(code, level_of(N))
        K_M = identities.K_M if isinstance(identities, IdentityGenerators) else identities
        if K_M.ncols != code.n:
            raise DimensionError(f"K_M has {K_M.ncols} columns, code has {code.n} qubits")
        if K_M.modulus == N:
            return K_M
        if 2 * K_M.modulus == N:
            return K_M.lift(N)
        raise DimensionError(f"K_M is mod {K_M.modulus}, test runs mod {N}")

    @staticmethod
    def search_by_action(code: CssCode, t: int, target: DiagProduct) -> Union[XpOp, NotFound]:
        """
        Find XP_N(p|0|z) whose phase on every codeword |v>_L is the target's phase on |v>.

        For each weight-truncated string e_uv the row (-q_v/2 | e_uv) goes into E_B, where w^(q_v)
        is the target phase on |v> relative to |0>. A kernel element (1 | z) gives e_uv.z = q_v/2.
        The global phase of the target becomes p.

        Returns:
            XpOp, or NotFound when no kernel element has first coordinate 1
        """
        if target.n != code.k:
            raise DimensionError(f"Target acts on {target.n} qubits, code has k={code.k}")
        N = precision(t)
        target = to_cp(target)
        if target.N != N:
            target = target.rescale(N)

        p = product_phase(target, (0,) * code.k)
        rows = []
        for row in codeword_rows(code, t):
            relative = (product_phase(target, row.v) - p) % (2 * N)
            if relative % 2:
                return NotFound(f"Target phase on |{''.join(map(str, row.v))}> is an odd power of w at N={N}")
            rows.append([(-relative // 2) % N] + list(row.e))

        K_B = kernel(ZnMatrix(N, np.array(rows, dtype=np.int64), code.n + 1))
        if K_B.nrows and leading_index(K_B.rows[0]) == 0 and K_B.rows[0][0] == 1:
            z = K_B.rows[0][1:]
            logger.debug("Found z=%s for target at N=%d", z, N)
            return XpOp.diagonal(N, z, p=p)
        return NotFound(f"No diagonal XP operator of precision {N} has this logical action")

    @staticmethod
    def commutator_checks(code: CssCode, z: Sequence[int], N: int,
                          identities: Optional[Union[IdentityGenerators, ZnMatrix]] = None) -> List[CommutatorCheck]:
        """Per X-check values of the logical operator test (x.z, -2xz and its membership in K_M)"""
        vector = _z_vector(code, z, N)
        K_M = LogicEngine._identities_at(code, N, identities)
        checks = []
        for x in code.SX:
            xz = int(x @ vector) % N
            commutator = (-2 * x * vector) % N
            member = not commutator.any() or in_span(K_M, commutator)
            checks.append(CommutatorCheck(
                x=tuple(int(bit) for bit in x),
                xz=xz,
                commutator_z=tuple(int(value) for value in commutator),
                N=N,
                in_span=member,
            ))
        return checks

    @staticmethod
    def is_logical(code: CssCode, z: Sequence[int], N: int,
                   identities: Optional[Union[IdentityGenerators, ZnMatrix]] = None) -> bool:
        """
        Logical operator test for XP_N(0|0|z): for every X-check x, x.z = 0 mod N and 2xz lies
        in the span of the logical identities (given at level t-1 or t, computed when omitted)
        """
        return all(check.passes for check in LogicEngine.commutator_checks(code, z, N, identities))

    @staticmethod
    def commutant(K_M: ZnMatrix, x: Sequence[int], N: int) -> ZnMatrix:
        """
        Howell basis of {z : x.z = 0 mod N and 2xz in span(K_M)}

        The support of x is moved to the front (m columns). Vectors 2w supported there and lying
        in span(K_M) are span(2I_m | 0) intersected with K_M. Halving them and correcting the last
        support coordinate by v.1 gives solutions with x.z = 0; the halves are only determined up to
        N/2, so the (N/2)(e_i + e_m-1) pairs are added, then the free columns off the support.
        """
        x_bits = np.asarray(x, dtype=np.int64) % 2
        n = len(x_bits)
        if K_M.ncols != n:
            raise DimensionError(f"x has length {n}, K_M has {K_M.ncols} columns")
        if K_M.modulus != N:
            K_M = K_M.lift(N)
        support = [int(i) for i in np.flatnonzero(x_bits)]
        if not support:
            raise DimensionError("Commutant needs a nonzero X-check")
        rest = [i for i in range(n) if not x_bits[i]]
        order = support + rest
        m = len(support)
        half = N // 2

        C0 = np.zeros((m, n), dtype=np.int64)
        C0[:, :m] = 2 * np.eye(m, dtype=np.int64)
        C1 = span_intersection(ZnMatrix(N, C0, n), howell(K_M.permute_columns(order)))

        halves = [row // 2 for row in C1.rows]
        sums = [int(v[:m].sum()) % N for v in halves]
        rows: List[np.ndarray] = []
        if all((2 * s) % N == 0 for s in sums):
            for v, s in zip(halves, sums):
                v = v.copy()
                v[m - 1] -= s
                rows.append(v % N)
            for i in range(m - 1):
                paired = np.zeros(n, dtype=np.int64)
                paired[i] = paired[m - 1] = half
                rows.append(paired)
        else:
            # K_M does not annihilate x, so the last-coordinate correction would move 2v
            logger.debug("K_M not orthogonal to x, solving the support block by intersection")
            lifts = [v[:m] for v in halves]
            lifts += [half * np.eye(m, dtype=np.int64)[i] for i in range(m)]
            preimage = ZnMatrix(N, np.array(lifts, dtype=np.int64), m)
            balanced = kernel(ZnMatrix(N, np.ones((1, m), dtype=np.int64), m))
            for w in span_intersection(preimage, balanced).rows:
                rows.append(np.concatenate([w, np.zeros(n - m, dtype=np.int64)]))
        for j in range(m, n):
            free = np.zeros(n, dtype=np.int64)
            free[j] = 1
            rows.append(free)

        if not rows:
            return ZnMatrix.empty(N, n)
        solutions = np.array(rows, dtype=np.int64)
        restored = np.zeros_like(solutions)
        restored[:, order] = solutions
        return howell(ZnMatrix(N, restored, n))

    @staticmethod
    def logical_operator_span(code: CssCode, t: int) -> ZnMatrix:
        """K_L: the commutants of all X-checks intersected, the full space when there are none"""
        N = precision(t)
        K_M = LogicEngine.identities_for_test(code, t)
        K_L = ZnMatrix.identity(N, code.n)
        for x in code.SX:
            K_L = span_intersection(K_L, LogicEngine.commutant(K_M, x, N))
        return K_L

    @staticmethod
    def logical_generators(code: CssCode, t: int) -> LogicalGenerators:
        """
        Howell basis K_L of the Z-components of all diagonal logical operators at level t,
        each row annotated with its action and level

        Returns:
            LogicalGenerators with rows of non-trivial action first (Howell order), identities last
        """
        N = precision(t)
        K_L = LogicEngine.logical_operator_span(code, t)
        annotated = []
        identities = []
        for z in K_L.rows:
            action = LogicEngine.logical_action(code, z, N)
            row = GeneratorRow(tuple(int(value) for value in z), product_level(action), action)
            (identities if row.is_identity else annotated).append(row)
        logger.info("K_L of %r at t=%d: %d rows, %d with non-trivial action", code, t, K_L.nrows, len(annotated))
        return LogicalGenerators(N, K_L, annotated + identities)

    @staticmethod
    def logical_action(code: CssCode, z: Sequence[int], N: int, p: int = 0) -> DiagProduct:
        """
        CP product on the k logical qubits with the same phase on |v> as XP_N(p|0|z) on |v>_L.

        Phases q_v = p + 2 (v.LX).z are taken for wt(v) <= t; processing v by weight, q_v is
        subtracted from every q_u with v below u, which leaves the CP coefficients. The result is
        checked against every weight-truncated codeword string.

        Raises:
            NotLogicalError: a codeword string disagrees with the recovered action
        """
        vector = _z_vector(code, z, N)
        t = level_of(N)
        k = code.k
        vectors = _low_weight_vectors(k, t)
        q = {}
        for v in vectors:
            e = (np.array(v, dtype=np.int64) @ code.LX) % 2 if k else np.zeros(code.n, dtype=np.int64)
            q[v] = (p + 2 * int(e @ vector)) % (2 * N)
        for v in vectors:
            for u in vectors:
                if u != v and all(b >= a for a, b in zip(v, u)):
                    q[u] = (q[u] - q[v]) % (2 * N)
        zero = (0,) * k
        terms = tuple(CpOp(N, q[v], v) for v in vectors if v != zero)
        action = DiagProduct(N, k, GateKind.CP, terms, q[zero])

        for row in codeword_rows(code, t):
            expected = product_phase(action, row.v)
            actual = (p + 2 * int(np.array(row.e, dtype=np.int64) @ vector)) % (2 * N)
            if actual != expected:
                raise NotLogicalError(
                    f"Phase w^{actual} on codeword string {''.join(map(str, row.e))} of |{''.join(map(str, row.v))}>_L, "
                    f"expected w^{expected}"
                )
        return action

    @staticmethod
    def action_table(code: CssCode, t: int, generators: Optional[LogicalGenerators] = None) -> List[GeneratorRow]:
        """
        Generators of the logical operator group modulo the logical identities, chosen so that
        each one has as simple an action as the group allows.

        Each K_L row becomes (CP coefficients of its action | 2z) over Z_2N, with the action
        columns ordered by weight. The Howell form of that matrix puts one row per independent
        action first; rows whose action block vanishes are logical identities and are dropped.
        """
        N = precision(t)
        if generators is None:
            generators = LogicEngine.logical_generators(code, t)
        vectors = [v for v in _low_weight_vectors(code.k, t) if any(v)]
        width = len(vectors)
        augmented = []
        for row in generators.rows:
            coefficients = [row.action.coefficient([i for i, bit in enumerate(v) if bit]) for v in vectors]
            augmented.append(coefficients + [2 * value for value in row.z])
        if not augmented or width == 0:
            return []
        H = howell(ZnMatrix(2 * N, np.array(augmented, dtype=np.int64), width + code.n))
        table = []
        for row in H.rows:
            if not row[:width].any():
                continue
            z = tuple(int(value // 2) % N for value in row[width:])
            action = LogicEngine.logical_action(code, z, N)
            table.append(GeneratorRow(z, product_level(action), action))
        return table

    @staticmethod
    def logical_quotient(code: CssCode, t: int) -> Tuple[IdentityGenerators, LogicalGenerators, List[GeneratorRow]]:
        """
        The three parts of the generators report

        Returns:
            (K_M at level t, K_L with identities last, the action table of K_L modulo K_M)
        """
        generators = LogicEngine.logical_generators(code, t)
        return (
            LogicEngine.logical_identities(code, t),
            generators,
            LogicEngine.action_table(code, t, generators),
        )
