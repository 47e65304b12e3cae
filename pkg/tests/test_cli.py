import json

import pytest

from cli import main
from config import Caps, RunConfig
from managers import EXIT_INPUT_ERROR, EXIT_NOT_FOUND, EXIT_OK, RunManager
from models import CapExceededError


@pytest.fixture
def hypercube_path(data_dir):
    return str(data_dir / "hypercube.code")


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


# ============================================================================
# Code commands
# ============================================================================

def test_identities(capsys, hypercube_path):
    code, out = run(capsys, "identities", hypercube_path, "-t", "3")
    assert code == EXIT_OK
    assert out.splitlines() == ["K_M  N=8  rows=4", "22222222", "04040404", "00440044", "00004444"]


def test_search_ccz(capsys, hypercube_path):
    code, out = run(capsys, "search", hypercube_path, "-t", "3", "--target", "CCZ[0,1,2]")
    assert code == EXIT_OK
    assert "action=CCZ[0,1,2]" in out
    assert "verified=oracle" in out


def test_search_not_found(capsys, hypercube_path):
    code, out = run(capsys, "search", hypercube_path, "-t", "3", "--target", "S[0]")
    assert code == EXIT_NOT_FOUND
    assert out.startswith("not found")


def test_search_json(capsys, hypercube_path):
    code, out = run(capsys, "search", hypercube_path, "-t", "3", "--target", "CCZ[0,1,2]", "--format", "json")
    report = json.loads(out)
    assert report["exit_code"] == code == EXIT_OK
    assert report["found"] is True
    assert report["action"] == "CCZ[0,1,2]"
    assert report["verified"] == "oracle"


def test_logical_operator_test(capsys, hypercube_path):
    code, out = run(capsys, "test", hypercube_path, "-t", "3", "--z", "13313113")
    assert code == EXIT_OK
    assert "logical=yes" in out
    assert "action=CCZ[0,1,2]" in out


def test_action_of_non_logical_operator(capsys, hypercube_path):
    code, out = run(capsys, "action", hypercube_path, "-t", "3", "--z", "10000000")
    assert code == EXIT_NOT_FOUND
    assert out.startswith("not logical")


def test_generators(capsys, hypercube_path):
    code, out = run(capsys, "generators", hypercube_path, "-t", "3")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[:5] == ["K_M  N=8  rows=4", "22222222", "04040404", "00440044", "00004444"]
    assert lines[5].startswith("K_L  N=8  rows=")
    count = int(lines[5].rsplit("=", 1)[1])
    k_l = lines[6:6 + count]
    identities = [line.endswith("action=I") for line in k_l]
    assert identities == sorted(identities)
    assert lines[6 + count] == "generators  rows=7"
    assert any(line.endswith("level=3  action=CCZ[0,1,2]") for line in lines[7 + count:-1])
    assert lines[-1] == "verified=oracle"


def test_info(capsys, data_dir):
    code, out = run(capsys, "info", str(data_dir / "422.code"))
    assert code == EXIT_OK
    assert out.splitlines()[0].startswith("n=4  k=2  r=1")


# ============================================================================
# Input errors
# ============================================================================

def test_missing_file(capsys, tmp_path):
    assert main(["identities", str(tmp_path / "missing.code")]) == EXIT_INPUT_ERROR
    assert "error:" in capsys.readouterr().err


def test_malformed_code_file(capsys, tmp_path):
    path = tmp_path / "bad.code"
    path.write_text("SX\n11x1\n", encoding="utf-8")
    code, _ = run(capsys, "identities", str(path))
    assert code == EXIT_INPUT_ERROR


def test_bad_target(capsys, hypercube_path):
    code, _ = run(capsys, "search", hypercube_path, "-t", "3", "--target", "FOO[0]")
    assert code == EXIT_INPUT_ERROR


# ============================================================================
# Commands without a code file
# ============================================================================

def test_toric(capsys):
    code, out = run(capsys, "toric", "-k", "1", "-d", "3")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "# toric code k=1 d=3"
    assert lines[lines.index("LX") + 1] == "001"


def test_construct(capsys):
    code, out = run(capsys, "construct", "--target", "CZ[0,1]", "-d", "2")
    assert code == EXIT_OK
    assert "n=4" in out.splitlines()[0]
    assert "PGATES" in out
    assert "verified=oracle" in out


def test_noncss(capsys, data_dir):
    code, out = run(capsys, "noncss", str(data_dir / "five_qubit.stab"))
    assert code == EXIT_OK
    assert "q=00000" in out
    assert "distance=3  css_distance=1" in out


def test_manager_is_reused(capsys, hypercube_path):
    manager = RunManager()
    assert main(["identities", hypercube_path, "-t", "3"], manager) == EXIT_OK
    assert main(["identities", hypercube_path, "-t", "3"], manager) == EXIT_OK
    assert manager.get_cached_count() == 1
    assert main(["test", hypercube_path, "-t", "3", "--z", "13313113"], manager) == EXIT_OK
    assert manager.get_cached_count() == 2


def test_identities_golden(capsys, hypercube_path, golden_dir):
    _, out = run(capsys, "identities", hypercube_path, "-t", "3")
    assert out == (golden_dir / "identities_hypercube_t3.txt").read_text(encoding="utf-8")


def test_depth_one_with_dependent_cycles(capsys, data_dir):
    code, out = run(capsys, "depth-one", str(data_dir / "422.code"), "-t", "2", "--cycles", "(0,3)(1,2)")
    assert code == EXIT_NOT_FOUND
    assert out.startswith("not found")


# ============================================================================
# Caps
# ============================================================================

def test_enumeration_cap_bounds_verification(data_dir):
    source = (data_dir / "hypercube.code").read_text(encoding="utf-8")
    manager = RunManager()
    with pytest.raises(CapExceededError):
        manager.run(RunConfig("test", t=3, z="13313113", caps=Caps(enumeration=3)), source)
    report = manager.run(RunConfig("test", t=3, z="13313113", caps=Caps(enumeration=3, oracle=3)), source)
    assert report.exit_code == EXIT_OK
    assert report.data["verified"] == "skipped"


def test_enumeration_cap_from_environment(capsys, monkeypatch, hypercube_path):
    monkeypatch.setenv("XPCALC_ENUM_CAP", "3")
    assert main(["test", hypercube_path, "-t", "3", "--z", "13313113"]) == EXIT_INPUT_ERROR
    assert "exceeds cap" in capsys.readouterr().err


# ============================================================================
# Golden reports
# ============================================================================

@pytest.mark.parametrize("golden, argv", [
    ("test_hypercube_ccz.txt", ["test", "hypercube.code", "-t", "3", "--z", "13313113"]),
    ("action_422_cz.txt", ["action", "422.code", "-t", "2", "--z", "1331"]),
    ("search_422_cz.txt", ["search", "422.code", "-t", "2", "--target", "CZ[0,1]"]),
    ("generators_422_t2.txt", ["generators", "422.code", "-t", "2"]),
    ("canonical_422_cz.txt", ["canonical", "422.code", "-t", "2", "--target", "CZ[0,1]"]),
])
def test_code_command_golden(capsys, data_dir, golden_dir, golden, argv):
    argv[1] = str(data_dir / argv[1])
    code, out = run(capsys, *argv)
    assert code == EXIT_OK
    assert out == (golden_dir / golden).read_text(encoding="utf-8")


def test_depth_one_golden(capsys, tmp_path, golden_dir):
    path = tmp_path / "phase.code"
    path.write_text("# one qubit, no checks\nSX\nLX\n1\n", encoding="utf-8")
    code, out = run(capsys, "depth-one", str(path), "-t", "2")
    assert code == EXIT_OK
    assert out == (golden_dir / "depth_one_single_qubit.txt").read_text(encoding="utf-8")


def test_noncss_golden(capsys, tmp_path, golden_dir):
    path = tmp_path / "signed.stab"
    path.write_text("-ZZ\n", encoding="utf-8")
    code, out = run(capsys, "noncss", str(path))
    assert code == EXIT_OK
    assert out == (golden_dir / "noncss_signed_zz.txt").read_text(encoding="utf-8")


@pytest.mark.parametrize("golden, argv", [
    ("construct_s_d2.txt", ["construct", "--target", "S[0]", "-d", "2"]),
    ("table_d2.txt", ["table", "-d", "2"]),
])
def test_codeless_command_golden(capsys, golden_dir, golden, argv):
    code, out = run(capsys, *argv)
    assert code == EXIT_OK
    assert out == (golden_dir / golden).read_text(encoding="utf-8")


def test_generators_json_lists_k_l(capsys, data_dir):
    _, out = run(capsys, "generators", str(data_dir / "422.code"), "-t", "2", "--format", "json")
    report = json.loads(out)
    assert report["K_M"] == ["2222"]
    assert [row["z"] for row in report["K_L"]] == ["1111", "0202", "0022"]
    assert [row["action"] for row in report["generators"]] == ["Z[0]", "Z[1]", "CZ[0,1]"]
