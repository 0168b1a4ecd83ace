from pathlib import Path

import pytest

from catlr import fixtures

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def bullets():
    """The bundled bullet-study confusion table (row totals 1429 / 2891)."""
    return fixtures.bullets_table()


@pytest.fixture
def golden():
    def read(name: str) -> str:
        return (GOLDEN_DIR / name).read_text(encoding="utf-8")

    return read
