"""
xpcalc - Stabiliser File Format
One Pauli generator per line, with an optional leading sign:

    # 5-qubit code
    XZZXI
    IXZZX
    -XIXZZ

# starts a comment and blank lines are ignored. All generators must have the same length.
"""

from pathlib import Path

from models import CodeFormatError, PauliStabCode


def parse_stabilisers(text: str) -> PauliStabCode:
    strings = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if len(line.split()) != 1:
            raise CodeFormatError(f"Line {number}: one Pauli string per line, got '{line}'")
        strings.append(line)
    lengths = {len(string.lstrip("+-i")) for string in strings}
    if len(lengths) > 1:
        raise CodeFormatError(f"Generators of different lengths {sorted(lengths)}")
    return PauliStabCode.from_strings(strings)


def serialize_stabilisers(code: PauliStabCode) -> str:
    return "\n".join(code.to_strings()) + "\n"


def load_stabilisers(path) -> PauliStabCode:
    return parse_stabilisers(Path(path).read_text(encoding="utf-8"))
