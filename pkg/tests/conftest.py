import sys
from pathlib import Path

import pytest

TESTS = Path(__file__).resolve().parent
DATA = TESTS.parent / "data"
sys.path.insert(0, str(TESTS))


def data_file(name):
    path = DATA / name
    if not path.exists():
        pytest.skip(f"{name} not fetched (run scripts/fetch_data.py)")
    return path


@pytest.fixture(scope="session")
def words():
    from moezipf import IngestSpec, ingest

    return ingest(IngestSpec("observations", data_file("words.txt")))
