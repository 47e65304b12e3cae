"""
xpcalc - Run Manager
Runs one subcommand and builds its report, shared by the command line and the HTTP API.

RunManager manages the COLLECTION of computed logical identity groups, keyed by code fingerprint and
level, so repeated tests and searches on the same code reuse K_M.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from codes import code_distances, logical_z_matrix, parse_code, serialize_code
from config import RunConfig
from construct import ConstructionEngine, toric_code
from embed import EmbeddingEngine
from logic import LogicEngine
from models import (
    BudgetExhausted,
    CodeFormatError,
    CssCode,
    DiagProduct,
    IdentityGenerators,
    NotFound,
    NotLogicalError,
    XpOp,
    ZnMatrix,
    bits_to_string,
    format_residues,
    parse_residues,
)
from noncss import NonCssEngine, css_as_pauli, parse_stabilisers
from oracle import PhaseFn, check_logical, phase_of_product
from phaseops import format_gates, parse_gates, product_level

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_FOUND = 1
EXIT_INPUT_ERROR = 2

COMMANDS = (
    "identities", "search", "test", "generators", "action", "depth-one",
    "canonical", "construct", "noncss", "info", "toric", "table",
)

# commands that read a code file (noncss reads a stabiliser file)
NEEDS_CODE = ("identities", "search", "test", "generators", "action", "depth-one", "canonical", "info")


@dataclass
class RunReport:
    """
    Outcome of one command

        exit_code: 0 found, 1 not found or not logical, 2 input error
        lines: text report, one entry per line
        data: the same fields for the JSON report
    """
    exit_code: int
    lines: List[str] = field(default_factory=list)
    data: Dict = field(default_factory=dict)

    def text(self) -> str:
        return "\n".join(self.lines) + "\n" if self.lines else ""

    def to_dict(self) -> dict:
        return {"exit_code": self.exit_code, **self.data}


def operator_line(z, N: int, action: DiagProduct) -> str:
    return f"z={format_residues(z, N)}  N={N}  level={product_level(action)}  action={format_gates(action)}"


def operator_data(z, N: int, action: DiagProduct) -> dict:
    return {
        "z": format_residues(z, N),
        "N": N,
        "level": product_level(action),
        "action": format_gates(action),
    }


class RunManager:
    """
    Runs subcommands against an in-memory registry of logical identities.
    It handles:
    - Parsing code and stabiliser text
    - Caching K_M per (code, level)
    - Oracle verification of positive results
    - Report building for every subcommand
    """

    def __init__(self):
        """Initialize with empty identity registry."""
        self.identities: Dict[Tuple[str, int], IdentityGenerators] = {}

    # ------------------------------------------------------------------------
    # Registry
    # ------------------------------------------------------------------------

    def get_identities(self, code: CssCode, t: int) -> IdentityGenerators:
        """K_M of a code at level t, computed once per (fingerprint, t)"""
        key = (code.fingerprint(), t)
        if key not in self.identities:
            self.identities[key] = LogicEngine.logical_identities(code, t)
        else:
            logger.debug("Reusing K_M for %r at t=%d", code, t)
        return self.identities[key]

    def identities_for_test(self, code: CssCode, t: int) -> ZnMatrix:
        """Same matrix as LogicEngine.identities_for_test, drawing level t-1 identities from the registry"""
        N = 1 << t
        if t <= 2:
            return LogicEngine.identities_for_test(code, t)
        return self.get_identities(code, t - 1).K_M.lift(N)

    def clear(self):
        self.identities.clear()

    def get_cached_count(self) -> int:
        return len(self.identities)

    # ------------------------------------------------------------------------
    # Dispatch
    # ------------------------------------------------------------------------

    def run(self, config: RunConfig, source: Optional[str] = None) -> RunReport:
        """
        Run config.command. source is the text of the code file (or stabiliser file for noncss).
        Input errors are raised as XpCalcError for the caller to map to exit code 2.
        """
        handlers = {
            "identities": self.cmd_identities,
            "search": self.cmd_search,
            "test": self.cmd_test,
            "generators": self.cmd_generators,
            "action": self.cmd_action,
            "depth-one": self.cmd_depth_one,
            "canonical": self.cmd_canonical,
            "info": self.cmd_info,
        }
        logger.info("Running %s at t=%d", config.command, config.t)
        if config.command in handlers:
            if source is None:
                raise CodeFormatError(f"Command {config.command} needs a code file")
            return handlers[config.command](parse_code(source), config)
        if config.command == "noncss":
            if source is None:
                raise CodeFormatError("Command noncss needs a stabiliser file")
            return self.cmd_noncss(source, config)
        if config.command == "construct":
            return self.cmd_construct(config)
        if config.command == "toric":
            return self.cmd_toric(config)
        if config.command == "table":
            return self.cmd_table(config)
        raise CodeFormatError(f"Unknown command '{config.command}'")

    # ------------------------------------------------------------------------
    # Verification
    # ------------------------------------------------------------------------

    def _verify(self, code: CssCode, op: PhaseFn, expected: Optional[DiagProduct], config: RunConfig) -> str:
        """
        Oracle check of a positive result. Returns "oracle" when it passed, "skipped" when disabled
        or over the oracle cap, "FAILED" when the oracle disagrees.
        The enumeration cap still bounds the check and raises CapExceededError when it is lower.
        """
        if not config.verify or code.r + code.k > config.caps.oracle:
            return "skipped"
        result = check_logical(code, op, config.caps.enumeration)
        if not result.is_logical:
            logger.error("Oracle rejects the operator: witness %s", result.witness)
            return "FAILED"
        if expected is not None and result.action != expected:
            logger.error("Oracle action %s differs from %s", format_gates(result.action), format_gates(expected))
            return "FAILED"
        return "oracle"

    def _finish(self, lines: List[str], data: dict, verified: str, exit_code: int = EXIT_OK) -> RunReport:
        lines.append(f"verified={verified}")
        data["verified"] = verified
        if verified == "FAILED":
            exit_code = EXIT_NOT_FOUND
        return RunReport(exit_code, lines, data)

    def _require(self, value, flag: str, command: str):
        if value is None:
            raise CodeFormatError(f"{command} needs {flag}")
        return value

    # ------------------------------------------------------------------------
    # Commands
    # ------------------------------------------------------------------------

    def cmd_identities(self, code: CssCode, config: RunConfig) -> RunReport:
        """K_M: Z-components of the diagonal logical identities"""
        K_M = self.get_identities(code, config.t).K_M
        lines = [f"K_M  N={config.N}  rows={K_M.nrows}"] + K_M.to_strings()
        return RunReport(EXIT_OK, lines, {"N": config.N, "K_M": K_M.to_strings()})

    def cmd_search(self, code: CssCode, config: RunConfig) -> RunReport:
        """Diagonal operator with the target logical action"""
        target = parse_gates(self._require(config.target, "--target", "search"), config.N, n=code.k)
        found = LogicEngine.search_by_action(code, config.t, target)
        if isinstance(found, NotFound):
            return RunReport(EXIT_NOT_FOUND, [f"not found: {found.reason}"], {"found": False, **found.to_dict()})
        action = LogicEngine.logical_action(code, found.z, config.N, found.p)
        lines = [operator_line(found.z, config.N, action)]
        data = {"found": True, "p": found.p, **operator_data(found.z, config.N, action)}
        return self._finish(lines, data, self._verify(code, PhaseFn.from_xp(found), action, config))

    def cmd_test(self, code: CssCode, config: RunConfig) -> RunReport:
        """Logical operator test with its intermediate values"""
        z = parse_residues(self._require(config.z, "--z", "test"), config.N, length=code.n)
        K_M = self.identities_for_test(code, config.t)
        checks = LogicEngine.commutator_checks(code, z, config.N, K_M)
        logical = all(check.passes for check in checks)
        lines = [
            f"x={''.join(map(str, check.x))}  x.z={check.xz}  -2xz={format_residues(check.commutator_z, config.N)}"
            f"  in_span={'yes' if check.in_span else 'no'}"
            for check in checks
        ]
        lines.append(f"logical={'yes' if logical else 'no'}")
        data = {"logical": logical, "checks": [check.to_dict() for check in checks]}
        if not logical:
            return RunReport(EXIT_NOT_FOUND, lines, data)
        action = LogicEngine.logical_action(code, z, config.N)
        lines.append(operator_line(z, config.N, action))
        data.update(operator_data(z, config.N, action))
        verified = self._verify(code, PhaseFn.from_xp(XpOp.diagonal(config.N, z)), action, config)
        return self._finish(lines, data, verified)

    def cmd_generators(self, code: CssCode, config: RunConfig) -> RunReport:
        """Logical identities, K_L with its actions and the action table of K_L modulo K_M"""
        identities, generators, table = LogicEngine.logical_quotient(code, config.t)
        self.identities.setdefault((code.fingerprint(), config.t), identities)
        lines = [f"K_M  N={config.N}  rows={identities.K_M.nrows}"] + identities.K_M.to_strings()
        lines.append(f"K_L  N={config.N}  rows={len(generators.rows)}")
        lines += [operator_line(row.z, config.N, row.action) for row in generators.rows]
        lines.append(f"generators  rows={len(table)}")
        lines += [operator_line(row.z, config.N, row.action) for row in table]
        data = {
            "N": config.N,
            "K_M": identities.K_M.to_strings(),
            "K_L": [operator_data(row.z, config.N, row.action) for row in generators.rows],
            "generators": [operator_data(row.z, config.N, row.action) for row in table],
        }
        verified = "oracle"
        for row in list(generators.rows) + table:
            outcome = self._verify(code, PhaseFn.from_xp(XpOp.diagonal(config.N, row.z)), row.action, config)
            if outcome != "oracle":
                verified = outcome
                if outcome == "FAILED":
                    break
        return self._finish(lines, data, verified)

    def cmd_action(self, code: CssCode, config: RunConfig) -> RunReport:
        """Logical action of XP_N(0|0|z)"""
        z = parse_residues(self._require(config.z, "--z", "action"), config.N, length=code.n)
        try:
            action = LogicEngine.logical_action(code, z, config.N)
        except NotLogicalError as err:
            return RunReport(EXIT_NOT_FOUND, [f"not logical: {err}"], {"logical": False, "reason": str(err)})
        lines = [operator_line(z, config.N, action)]
        data = {"logical": True, **operator_data(z, config.N, action)}
        verified = self._verify(code, PhaseFn.from_xp(XpOp.diagonal(config.N, z)), action, config)
        return self._finish(lines, data, verified)

    def cmd_depth_one(self, code: CssCode, config: RunConfig) -> RunReport:
        """Depth-one logical operator search on the embedded code"""
        embedding = EmbeddingEngine.parse_cycles(config.cycles, code.n) if config.cycles else None
        budget = config.budget if config.budget is not None else config.caps.dfs_budget
        result = EmbeddingEngine.depth_one_search(code, config.t, embedding, budget, config.same_action)
        if isinstance(result, NotFound):
            return RunReport(EXIT_NOT_FOUND, [f"not found: {result.reason}"], {"found": False, **result.to_dict()})
        if isinstance(result, BudgetExhausted):
            return RunReport(EXIT_NOT_FOUND, [f"budget exhausted after {result.nodes} nodes"],
                             {"found": False, **result.to_dict()})
        lines = [
            operator_line(result.z, result.N, result.action),
            f"gates={format_gates(result.gates)}",
            f"nodes={result.nodes}",
        ]
        data = {
            "found": True,
            **operator_data(result.z, result.N, result.action),
            "gates": format_gates(result.gates),
            "nodes": result.nodes,
        }
        verified = self._verify(code, phase_of_product(result.gates), result.action, config)
        return self._finish(lines, data, verified)

    def cmd_canonical(self, code: CssCode, config: RunConfig) -> RunReport:
        """Canonical implementation of a logical target by gates of support at most t"""
        target = parse_gates(self._require(config.target, "--target", "canonical"), config.N, n=code.k)
        result = ConstructionEngine.canonical_cp_op(code, target, config.t)
        lines = [
            f"target={format_gates(result.target)}  N={config.N}  max_support={result.max_support}",
            f"rp={format_gates(result.rp_terms)}",
            f"cp={format_gates(result.cp_terms)}",
        ]
        data = {
            "target": format_gates(result.target),
            "N": config.N,
            "max_support": result.max_support,
            "rp": format_gates(result.rp_terms),
            "cp": format_gates(result.cp_terms),
        }
        verified = self._verify(code, phase_of_product(result.cp_terms), result.target, config)
        return self._finish(lines, data, verified)

    def cmd_construct(self, config: RunConfig) -> RunReport:
        """Code carrying the target as single-qubit phase gates, as a code file with PGATES"""
        text = self._require(config.target, "--target", "construct")
        target = parse_gates(text, 1 << 8)
        d = config.distances[0]
        result = ConstructionEngine.construct_code(target, d)
        comment = (
            f"target {text}  d={d}  n={result.code.n}  k={result.code.k}  N={result.N}"
            f"  policy={result.drop_policy}  exact={'yes' if result.exact else 'no'}"
        )
        lines = serialize_code(result.code, result.exponents, comment).splitlines()
        data = {
            "target": text,
            "d": d,
            "N": result.N,
            "code": result.code.to_dict(),
            "pgates": {str(qubit): exponent for qubit, exponent in sorted(result.exponents.items())},
            "drop_policy": result.drop_policy,
            "exact": result.exact,
        }
        z = np.zeros(result.code.n, dtype=np.int64)
        for qubit, exponent in result.exponents.items():
            z[qubit] = exponent
        expected = parse_gates(text, result.N)
        expected = DiagProduct(expected.N, expected.n, expected.kind, expected.terms)
        verified = self._verify(result.code, PhaseFn.from_xp(XpOp.diagonal(result.N, z)), expected, config)
        return self._finish(lines, data, verified, EXIT_OK if result.exact else EXIT_NOT_FOUND)

    def cmd_noncss(self, source: str, config: RunConfig) -> RunReport:
        """Reduction C = D Q C' of a Pauli stabiliser code"""
        stab = parse_stabilisers(source)
        reduction = NonCssEngine.map_to_css(stab, config.caps.dense)
        distance = NonCssEngine.pauli_distance(stab, config.caps.distance)
        css_distance = NonCssEngine.pauli_distance(css_as_pauli(reduction.css_code), config.caps.distance)
        lines = serialize_code(reduction.css_code, comment="C' with C = D Q C'").splitlines()
        lines += [
            f"q={bits_to_string(reduction.q)}",
            f"D={format_gates(reduction.D)}",
            f"distance={distance}  css_distance={css_distance}",
        ]
        data = {
            **reduction.to_dict(),
            "D_gates": format_gates(reduction.D),
            "distance": distance,
            "css_distance": css_distance,
        }
        return self._finish(lines, data, "dense")

    def cmd_info(self, code: CssCode, config: RunConfig) -> RunReport:
        """Parameters, matrices and distances of a code"""
        distances = code_distances(code, config.caps.distance)
        LZ = logical_z_matrix(code)
        lines = [f"n={code.n}  k={code.k}  r={code.r}  dX={distances.dX}  dZ={distances.dZ}"]
        for name, matrix in (("SX", code.SX), ("LX", code.LX), ("SZ", code.SZ), ("LZ", LZ)):
            lines.append(name)
            lines.extend(bits_to_string(row) for row in matrix)
        data = {**code.to_dict(), "LZ": [bits_to_string(row) for row in LZ], **distances.to_dict()}
        return RunReport(EXIT_OK, lines, data)

    def cmd_toric(self, config: RunConfig) -> RunReport:
        d = config.distances[0]
        code = toric_code(config.k, d)
        lines = serialize_code(code, comment=f"toric code k={config.k} d={d}").splitlines()
        return RunReport(EXIT_OK, lines, {"k": config.k, "d": d, "code": code.to_dict()})

    def cmd_table(self, config: RunConfig) -> RunReport:
        """Construction table for the standard targets with reference comparison"""
        rows = ConstructionEngine.construction_table(distances=config.distances, distance_cap=config.caps.distance)
        lines = []
        for row in rows:
            flag = {True: "match", False: "MISMATCH", None: "unknown"}[row.matches]
            reference = ",".join(str(value) for value in row.reference) if row.reference else "-"
            lines.append(
                f"{row.target:<12} d={row.d}  n={row.n}  dX={row.dX}  dZ={row.dZ}"
                f"  exact={'yes' if row.exact else 'no'}  reference=({reference})  {flag}"
            )
        return RunReport(EXIT_OK, lines, {"rows": [row.to_dict() for row in rows]})
