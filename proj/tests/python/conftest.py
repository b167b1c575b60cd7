import os
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("EXRINGS_CLI_PATH", str(ROOT / "build" / "exrings"))
    if not os.path.exists(path):
        pytest.skip("CLI binary not built")
    return path


@pytest.fixture(scope="session")
def schema_dir():
    return ROOT / "schema"


@pytest.fixture(scope="session")
def data_dir():
    return ROOT / "tests" / "data"
