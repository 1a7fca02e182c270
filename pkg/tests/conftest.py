from __future__ import annotations

import os
from pathlib import Path

import pytest

TESTS_DIR = Path(__file__).resolve().parent
CORPUS_DIR = TESTS_DIR / "corpus"
GOLDEN_DIR = TESTS_DIR / "golden"

DEMO_CORPUS = CORPUS_DIR / "demo"
GOLDEN_CORPUS = CORPUS_DIR / "golden"
LINT_CORPUS = CORPUS_DIR / "lint"


@pytest.fixture
def update_goldens() -> bool:
    return bool(os.environ.get("JSCC_UPDATE_GOLDENS"))


def assert_golden(path: Path, actual: str, update: bool):
    """Compare against a locked snapshot; JSCC_UPDATE_GOLDENS=1 rewrites it."""
    if update:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(actual.encode("utf-8"))
    if not path.exists():
        pytest.fail(f"missing golden {path.name}; run with JSCC_UPDATE_GOLDENS=1 once")
    expected = path.read_bytes().decode("utf-8")
    assert actual == expected, f"output differs from locked golden {path.name}"
