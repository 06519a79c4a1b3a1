import json

import jsonschema
import pytest

COMMANDS = [
    ["dim", "--lambda", "2,1", "--n", "3"],
    ["decide", "--lambda", "2,1", "--k", "3", "--n", "6"],
    ["decide", "--lambda", "1,1,1", "--k", "5", "--n", "7"],
    ["min-n", "--lambda", "2,1", "--k", "2", "--max-k", "5"],
    ["oracle", "--lambda", "1,1,1", "--k", "5", "--n", "7"],
    ["oracle", "--lambda", "2,1", "--k", "3", "--n", "6"],
    ["check-lemma36", "--lambda", "2,1", "--k", "3", "--n", "6"],
    ["proof-chain", "--lambda", "3,1", "--k", "4", "--n", "16"],
    ["sweep", "--max-size", "3", "--max-k", "3", "--max-n", "6", "--with-oracle"],
    ["self-check"],
]


@pytest.mark.parametrize("args", COMMANDS, ids=lambda a: " ".join(a))
def test_output_matches_schema(cli, schema, args):
    proc = cli(*args, "--json")
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, schema)
    assert doc["command"] == args[0]
    assert "result" in doc


def test_worked_examples_through_cli(cli):
    doc = json.loads(cli("oracle", "--lambda", "1,1,1", "--k", "5", "--n", "7", "--json").stdout)
    assert doc["result"] == {"nonzero": False, "degree": "10", "shortcut": "none", "surviving": []}
    doc = json.loads(cli("decide", "--lambda", "2,1", "--k", "3", "--n", "6", "--json").stdout)
    assert doc["result"]["threshold_n"] == 6
    assert doc["result"]["dim"] == "8"


def test_domain_error_envelope(cli, schema):
    proc = cli("oracle", "--lambda", "1,1,1,1", "--k", "3", "--n", "5", "--json")
    assert proc.returncode == 1
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, schema)
    assert doc["error"]["code"] == "ZeroBundle"


def test_usage_errors(cli):
    assert cli("dim", "--lambda", "1,2", "--n", "3").returncode == 2
    assert cli("no-such-command").returncode == 2


def test_output_is_byte_identical(cli):
    args = ["sweep", "--max-size", "3", "--max-k", "3", "--max-n", "6", "--with-oracle", "--json"]
    assert cli(*args).stdout == cli(*args).stdout
