from pathlib import Path

import numpy as np
import pytest

from codes import build_code, load_code
from noncss import load_stabilisers

DATA_DIR = Path(__file__).resolve().parent.parent / "data" / "codes"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def golden_dir():
    return GOLDEN_DIR


@pytest.fixture
def hypercube():
    """[[8,3,2]]"""
    return load_code(DATA_DIR / "hypercube.code")


@pytest.fixture
def code_422():
    return load_code(DATA_DIR / "422.code")


@pytest.fixture
def repetition():
    return load_code(DATA_DIR / "repetition3.code")


@pytest.fixture
def code_12_2_2():
    return load_code(DATA_DIR / "12_2_2.code")


@pytest.fixture
def five_qubit():
    return load_stabilisers(DATA_DIR / "five_qubit.stab")


@pytest.fixture
def steane():
    """[[7,1,3]] with SX the Hamming checks"""
    return build_code(
        [[0, 0, 0, 1, 1, 1, 1], [0, 1, 1, 0, 0, 1, 1], [1, 0, 1, 0, 1, 0, 1]],
        [[1, 1, 1, 1, 1, 1, 1]],
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def toric_22():
    """[[8,2,2]]: the 2D toric code on the periodic 2 x 2 lattice"""
    from construct import toric_code

    return toric_code(2, 2)
