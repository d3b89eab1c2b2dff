import json
from pathlib import Path

import pytest

from lfuncdb.cli import main as cli_main

REPO = Path(__file__).resolve().parents[1]
DATA = REPO / "data"

BUILD_MAX_MODULUS = 20
BUILD_COEFFS = 200
BUILD_ZEROS_TO = 30.0


@pytest.fixture(scope="session")
def built_data_dir(tmp_path_factory) -> Path:
    """A fully seeded and built store directory, assembled through the CLI."""
    root = tmp_path_factory.mktemp("store")
    for collection in ("number_fields", "elliptic_curves_q", "knowls"):
        rc = cli_main([
            "ingest", "--data", str(root),
            "--collection", collection,
            "--file", str(DATA / f"{collection}.txt"),
        ])
        assert rc == 0
    rc = cli_main([
        "build-characters", "--data", str(root),
        "--max-modulus", str(BUILD_MAX_MODULUS),
        "--coeffs", str(BUILD_COEFFS),
        "--zeros-to", str(BUILD_ZEROS_TO),
    ])
    assert rc == 0
    rc = cli_main([
        "build-objects", "--data", str(root), "--coeffs", str(BUILD_COEFFS),
    ])
    assert rc == 0
    return root
