"""
xpcalc - FastAPI Server

main.py exposes the command-line reports over HTTP.
Every POST /api/{command} builds a RunConfig from the JSON body and returns the same report the
CLI prints with --format json.

Architecture:
- FastAPI handles HTTP requests (code listing, commands)
- RunManager runs the commands and caches logical identities between requests
- Engines (LogicEngine, EmbeddingEngine, ConstructionEngine, NonCssEngine) do the algebra
"""

import logging

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from codes import load_code
from config import Caps, FIXTURE_DIR, RunConfig, parse_distances
from managers import COMMANDS, NEEDS_CODE, RunManager
from models import XpCalcError

logger = logging.getLogger(__name__)

# Initialize FastAPI app
app = FastAPI(title="xpcalc")

# CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Initialize manager
run_manager = RunManager()

CODE_SUFFIXES = (".code", ".stab")


def fixture_path(name: str):
    """Bundled fixture file for a name such as 'hypercube' or 'five_qubit'"""
    for suffix in CODE_SUFFIXES:
        path = FIXTURE_DIR / f"{name}{suffix}"
        if path.is_file():
            return path
    raise HTTPException(status_code=404, detail=f"Code '{name}' not found")


# ============================================================================
# HTTP Routes
# ============================================================================

@app.get("/api/health")
async def health():
    """Liveness check"""
    return {"status": "ok"}


@app.get("/api/codes")
async def list_codes():
    """Names of the bundled fixture codes"""
    names = sorted(path.stem for path in FIXTURE_DIR.iterdir() if path.suffix in CODE_SUFFIXES)
    return {"codes": names}


@app.get("/api/codes/{name}")
async def get_code(name: str):
    """A bundled CSS code as JSON"""
    path = fixture_path(name)
    if path.suffix != ".code":
        return {"name": name, "stabilisers": path.read_text(encoding="utf-8").split()}
    try:
        code = load_code(path)
    except XpCalcError as err:
        raise HTTPException(status_code=400, detail=str(err))
    return {"name": name, **code.to_dict()}


@app.post("/api/{command}")
async def run_command(command: str, data: dict):
    """
    Run a command. Body fields: code (code or stabiliser text) or fixture (bundled name),
    t, target, z, cycles, d, k, budget, verify, same_action
    """
    if command not in COMMANDS:
        raise HTTPException(status_code=404, detail=f"Unknown command '{command}'")

    source = data.get("code") or data.get("stabilisers")
    if source is None and data.get("fixture"):
        source = fixture_path(data["fixture"]).read_text(encoding="utf-8")
    if source is None and (command in NEEDS_CODE or command == "noncss"):
        raise HTTPException(status_code=400, detail=f"Command {command} needs 'code' or 'fixture'")

    try:
        d = data.get("d", 2)
        config = RunConfig(
            command=command,
            t=int(data.get("t", 1)),
            target=data.get("target"),
            z=data.get("z"),
            cycles=data.get("cycles"),
            distances=parse_distances(str(d)) if not isinstance(d, list) else tuple(int(value) for value in d),
            k=int(data.get("k", 2)),
            output_format="json",
            verify=bool(data.get("verify", True)),
            budget=data.get("budget"),
            same_action=bool(data.get("same_action", False)),
            caps=Caps.from_env(),
        )
        report = run_manager.run(config, source)
    except (XpCalcError, ValueError) as err:
        raise HTTPException(status_code=400, detail=str(err))

    return report.to_dict()


# ============================================================================
# Startup
# ============================================================================

@app.on_event("startup")
async def startup_event():
    """Log server startup"""
    logger.info("=" * 50)
    logger.info("xpcalc - HTTP API started")
    logger.info("=" * 50)


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host="0.0.0.0", port=8000)
