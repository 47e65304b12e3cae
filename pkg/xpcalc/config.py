"""
xpcalc - Configuration
Run configuration built from the command line or an API request, and the computation caps.

Caps default to the values below and can be overridden through XPCALC_* environment variables.
"""

import os
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Optional, Tuple

from codes import DEFAULT_DISTANCE_CAP, DEFAULT_ENUMERATION_CAP
from embed import DEFAULT_DFS_BUDGET
from oracle import DEFAULT_DENSE_CAP, DEFAULT_ORACLE_CAP

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "data" / "codes"

ENV_PREFIX = "XPCALC_"


@dataclass(frozen=True)
class Caps:
    """
    Limits on exhaustive work

        enumeration: r + k for codeword enumeration
        distance: vectors enumerated by the distance search
        dfs_budget: nodes popped by the depth-one search
        dense: qubits of a dense state vector
        oracle: r + k for verification of positive results
    """
    enumeration: int = DEFAULT_ENUMERATION_CAP
    distance: int = DEFAULT_DISTANCE_CAP
    dfs_budget: int = DEFAULT_DFS_BUDGET
    dense: int = DEFAULT_DENSE_CAP
    oracle: int = DEFAULT_ORACLE_CAP

    @classmethod
    def from_env(cls, environ=None) -> "Caps":
        """Defaults overridden by XPCALC_ENUM_CAP, XPCALC_DISTANCE_CAP, XPCALC_DFS_BUDGET, XPCALC_DENSE_CAP, XPCALC_ORACLE_CAP"""
        environ = os.environ if environ is None else environ
        names = {
            "enumeration": "ENUM_CAP",
            "distance": "DISTANCE_CAP",
            "dfs_budget": "DFS_BUDGET",
            "dense": "DENSE_CAP",
            "oracle": "ORACLE_CAP",
        }
        values = {}
        for name, suffix in names.items():
            raw = environ.get(ENV_PREFIX + suffix)
            if raw is None:
                continue
            try:
                value = int(raw)
            except ValueError:
                raise ValueError(f"{ENV_PREFIX}{suffix} must be an integer, got '{raw}'")
            if value < 1:
                raise ValueError(f"{ENV_PREFIX}{suffix} must be positive, got {value}")
            values[name] = value
        return cls(**values)

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass
class RunConfig:
    """
    One subcommand invocation

        command: subcommand name
        code_path: code file (or stabiliser file for noncss)
        t: Clifford level, N = 2^t
        target: gate string
        z: Z-component as digits
        cycles: embedding as a permutation in cycle form
        distances: code distances for construct and table
        k: toric code dimension
        output_format: text or json
        verify: check positive results with the oracle when under its cap
        budget: depth-one search budget, None for the cap default
        same_action: depth-one search keeps the exact action of the generator
    """
    command: str
    code_path: Optional[Path] = None
    t: int = 1
    target: Optional[str] = None
    z: Optional[str] = None
    cycles: Optional[str] = None
    distances: Tuple[int, ...] = (2, 3)
    k: int = 2
    output_format: str = "text"
    verify: bool = True
    budget: Optional[int] = None
    same_action: bool = False
    caps: Caps = field(default_factory=Caps)

    def __post_init__(self):
        if self.t < 1:
            raise ValueError(f"Level t must be at least 1, got {self.t}")
        if self.output_format not in ("text", "json"):
            raise ValueError(f"Unknown output format '{self.output_format}'")

    @property
    def N(self) -> int:
        return 1 << self.t

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        """Build from an argparse namespace; options a subcommand does not define keep their defaults"""
        distances = getattr(args, "distance", None)
        if isinstance(distances, str):
            distances = parse_distances(distances)
        code = getattr(args, "code", None)
        return cls(
            command=args.command,
            code_path=Path(code) if code else None,
            t=getattr(args, "level", None) or 1,
            target=getattr(args, "target", None),
            z=getattr(args, "z", None),
            cycles=getattr(args, "cycles", None),
            distances=tuple(distances) if distances else (2, 3),
            k=getattr(args, "k", None) or 2,
            output_format=getattr(args, "format", "text"),
            verify=not getattr(args, "no_verify", False),
            budget=getattr(args, "budget", None),
            same_action=getattr(args, "same_action", False),
            caps=Caps.from_env(),
        )


def parse_distances(text: str) -> Tuple[int, ...]:
    """'2,3' or '3' to a tuple of distances"""
    try:
        values = tuple(int(part) for part in text.replace(" ", "").split(",") if part)
    except ValueError:
        raise ValueError(f"Distances must be integers separated by commas, got '{text}'")
    if not values:
        raise ValueError("No distance given")
    return values
