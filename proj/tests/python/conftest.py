import json
import os
import subprocess
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("ISOTROPY_CLI")
    if not path:
        pytest.skip("ISOTROPY_CLI not set")

    def run(*args):
        proc = subprocess.run([path, *args], capture_output=True, text=True, check=False)
        return proc

    return run


@pytest.fixture(scope="session")
def schema():
    path = os.environ.get("ISOTROPY_SCHEMA", str(ROOT / "schemas" / "output.schema.json"))
    with open(path) as fh:
        return json.load(fh)
