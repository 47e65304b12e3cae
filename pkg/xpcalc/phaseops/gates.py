"""
xpcalc - Gate Strings
Text form of diagonal products, zero-indexed:

    Z[i]  S[i]  S3[i]  T[i]  CZ[i,j]  CS[i,j]  CCZ[i,j,k]  RP(q)[i,j,...]  CP(q)[i,j,...]  PHASE(p)  I

Named gates are fixed phases (Z = pi, S = pi/2, S3 = 3pi/2, T = pi/4 on the all-ones state of their
qubits), so their exponent depends on the precision N. RP(q) and CP(q) take q at precision N.
Terms may be separated by spaces, commas or '*': "CZ[1,2], S[1]" and "CZ[1,2] S[1]" are the same.
"""

import re
from typing import List, Optional

from models import CpOp, DiagProduct, GateKind, GateSyntaxError, RpOp, indicator
from phaseops.calculus import product_level, rp_to_cp

# name -> (numerator, denominator) of the phase as a multiple of pi, and the qubit count
NAMED_GATES = {
    "Z": ((1, 1), 1),
    "S": ((1, 2), 1),
    "S3": ((3, 2), 1),
    "T": ((1, 4), 1),
    "CZ": ((1, 1), 2),
    "CS": ((1, 2), 2),
    "CCZ": ((1, 1), 3),
}

TOKEN = re.compile(
    r"(?P<name>[A-Za-z]+\d?)\s*(?:\(\s*(?P<q>-?\d+)\s*\))?\s*(?:\[(?P<qubits>[\d,\s]*)\])?"
)
SEPARATORS = re.compile(r"[\s,*]*")


def _named_exponent(name: str, N: int) -> int:
    (numerator, denominator), _ = NAMED_GATES[name]
    if (N * numerator) % denominator:
        raise GateSyntaxError(f"{name} needs precision at least {denominator}, got N={N}")
    return N * numerator // denominator


def _tokens(text: str):
    position = 0
    text = text.strip()
    while position < len(text):
        skip = SEPARATORS.match(text, position)
        position = skip.end()
        if position >= len(text):
            break
        match = TOKEN.match(text, position)
        if not match or match.end() == position:
            raise GateSyntaxError(f"Cannot parse gate string at '{text[position:]}'")
        yield match
        position = match.end()


def parse_gates(text: str, N: int, n: Optional[int] = None) -> DiagProduct:
    """
    Parse a gate string into a CP product at precision N on n qubits
    (n defaults to one more than the largest qubit index mentioned).
    RP terms are converted to CP terms.
    """
    parsed = []
    phase = 0
    for match in _tokens(text):
        name = match.group("name").upper()
        q_text, qubit_text = match.group("q"), match.group("qubits")
        if name == "I" and q_text is None and qubit_text is None:
            continue
        if name == "PHASE":
            if q_text is None or qubit_text is not None:
                raise GateSyntaxError("PHASE takes an exponent and no qubits, e.g. PHASE(4)")
            phase += int(q_text)
            continue
        if qubit_text is None:
            raise GateSyntaxError(f"Gate {name} needs qubits in brackets")
        try:
            qubits = [int(part) for part in qubit_text.replace(" ", "").split(",") if part]
        except ValueError as err:
            raise GateSyntaxError(f"Bad qubit list '{qubit_text}'") from err
        if not qubits or len(set(qubits)) != len(qubits):
            raise GateSyntaxError(f"Gate {name} needs distinct qubits, got {qubits}")
        if name in NAMED_GATES:
            if q_text is not None:
                raise GateSyntaxError(f"{name} does not take a coefficient")
            if len(qubits) != NAMED_GATES[name][1]:
                raise GateSyntaxError(f"{name} acts on {NAMED_GATES[name][1]} qubit(s), got {qubits}")
            parsed.append((GateKind.CP, _named_exponent(name, N), qubits))
        elif name in ("CP", "RP"):
            if q_text is None:
                raise GateSyntaxError(f"{name} needs a coefficient, e.g. {name}(2)[0,1]")
            parsed.append((GateKind(name), int(q_text), qubits))
        else:
            raise GateSyntaxError(f"Unknown gate '{name}'")

    size = n if n is not None else max((max(qubits) + 1 for _, _, qubits in parsed), default=0)
    if any(max(qubits) >= size for _, _, qubits in parsed):
        raise GateSyntaxError(f"Qubit index out of range for {size} qubits in '{text}'")
    product = DiagProduct(N, size, GateKind.CP, phase=phase)
    for kind, q, qubits in parsed:
        v = indicator(qubits, size)
        if kind == GateKind.CP:
            product = product.compose(DiagProduct(N, size, GateKind.CP, (CpOp(N, q, v),)))
        else:
            product = product.compose(rp_to_cp(RpOp(N, q, v)))
    return product


def _term_name(term: CpOp) -> Optional[str]:
    for name, ((numerator, denominator), weight) in NAMED_GATES.items():
        if weight != term.weight or (term.N * numerator) % denominator:
            continue
        if term.q == term.N * numerator // denominator:
            return name
    return None


def format_gates(product: DiagProduct) -> str:
    """Gate string of a product, named gates where they apply, I for the identity"""
    parts: List[str] = []
    for term in product.terms:
        qubits = ",".join(str(i) for i in term.support)
        name = _term_name(term) if product.kind == GateKind.CP else None
        if name:
            parts.append(f"{name}[{qubits}]")
        else:
            parts.append(f"{product.kind.value}({term.q})[{qubits}]")
    if product.phase:
        parts.append(f"PHASE({product.phase})")
    return " ".join(parts) if parts else "I"


def gate_level(text: str) -> int:
    """Smallest level t whose precision 2^t represents every gate of the string"""
    product = parse_gates(text, 1 << 8)
    return max(product_level(product), 1)
