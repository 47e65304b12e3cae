"""
xpcalc - Code File Format
Line-oriented text format for CSS codes, matching how check matrices are printed:

    # [[4,2,2]] code
    SX
    1111
    LX
    0101
    0011

Section headers SX and LX are each followed by one binary string per row, # starts a comment and
blank lines are ignored. A PGATES section (qubit:exponent lines) may follow, as written by the
construct command; it is skipped when reading a code.
"""

from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np

from codes.code_builder import build_code
from models import CodeFormatError, CssCode, bits_to_string

SECTIONS = ("SX", "LX", "PGATES")


def parse_bits(text: str) -> List[int]:
    text = text.strip()
    if not text or any(char not in "01" for char in text):
        raise CodeFormatError(f"Not a binary string: '{text}'")
    return [int(char) for char in text]


def _split_sections(text: str) -> Dict[str, List[Tuple[int, str]]]:
    sections: Dict[str, List[Tuple[int, str]]] = {}
    current: Optional[str] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.upper() in SECTIONS:
            current = line.upper()
            if current in sections:
                raise CodeFormatError(f"Line {number}: section {current} appears twice")
            sections[current] = []
            continue
        if current is None:
            raise CodeFormatError(f"Line {number}: row before any SX/LX header")
        sections[current].append((number, line))
    return sections


def parse_code(text: str) -> CssCode:
    """Parse the code format; SX may be empty, LX may be empty (k = 0)"""
    sections = _split_sections(text)
    if "SX" not in sections and "LX" not in sections:
        raise CodeFormatError("No SX or LX section found")
    matrices = {}
    width = None
    for name in ("SX", "LX"):
        rows = []
        for number, line in sections.get(name, []):
            try:
                row = parse_bits(line)
            except CodeFormatError as err:
                raise CodeFormatError(f"Line {number}: {err}") from err
            if width is not None and len(row) != width:
                raise CodeFormatError(f"Line {number}: row has {len(row)} columns, expected {width}")
            width = len(row)
            rows.append(row)
        matrices[name] = rows
    if width is None:
        raise CodeFormatError("Code has no rows")
    return build_code(
        np.array(matrices["SX"], dtype=np.int64).reshape(-1, width),
        np.array(matrices["LX"], dtype=np.int64).reshape(-1, width),
    )


def parse_pgates(text: str) -> Dict[int, int]:
    """The qubit:exponent lines of a PGATES section (empty when there is none)"""
    gates = {}
    for number, line in _split_sections(text).get("PGATES", []):
        try:
            qubit, exponent = (int(part) for part in line.split(":"))
        except ValueError as err:
            raise CodeFormatError(f"Line {number}: expected qubit:exponent, got '{line}'") from err
        gates[qubit] = exponent
    return gates


def serialize_code(code: CssCode, pgates: Optional[Dict[int, int]] = None, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append("SX")
    lines.extend(bits_to_string(row) for row in code.SX)
    lines.append("LX")
    lines.extend(bits_to_string(row) for row in code.LX)
    if pgates is not None:
        lines.append("PGATES")
        lines.extend(f"{qubit}:{exponent}" for qubit, exponent in sorted(pgates.items()))
    return "\n".join(lines) + "\n"


def load_code(path) -> CssCode:
    """Read a code file from disk"""
    return parse_code(Path(path).read_text(encoding="utf-8"))
