import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from pellpascal import cli

SCHEMAS = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def run_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "pellpascal.cli", *argv],
        capture_output=True, text=True, timeout=600,
    )
    return proc


def load_schema(name):
    return json.loads((SCHEMAS / name).read_text())


def test_search_subcommand_validates_against_schema():
    proc = run_cli("search", "--k", "6", "--quartile", "median", "--bound", "10000")
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, load_schema("search-report.schema.json"))
    assert doc["solutions"] == [{"m_quarters": "40", "n": "11"}]


def test_search_in_process_matches_subprocess():
    import io
    from contextlib import redirect_stdout
    buf = io.StringIO()
    with redirect_stdout(buf):
        rc = cli.main(["search", "--k", "2", "--bound", "1000", "--domain", "integers"])
    assert rc == 0
    doc = json.loads(buf.getvalue())
    assert [s["n"] for s in doc["solutions"]] == ["8", "49", "288"]


def test_pell_classes_schema():
    proc = run_cli("pell", "classes", "--d", "8", "--c", "8", "--bound", "1000",
                   "--unit-power", "4", "--keep-conjugates")
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, load_schema("pell-classes.schema.json"))
    assert len(doc["classes"]) == 4


def test_pell_unit_and_verify():
    proc = run_cli("pell", "unit", "--d", "2")
    doc = json.loads(proc.stdout)
    assert doc["plus_one"] == ["3", "2"] and doc["minus_one"] == ["1", "1"]
    proc = run_cli("pell", "verify")
    doc = json.loads(proc.stdout)
    assert doc["mismatches"] == 1


def test_cf_subcommands():
    proc = run_cli("cf", "expand", "--base", "2", "--index", "2", "--terms", "5")
    doc = json.loads(proc.stdout)
    assert doc["quotients"] == [1, 2, 2, 2, 2]
    proc = run_cli("cf", "convergents", "--base", "8", "--index", "2", "--terms", "4")
    doc = json.loads(proc.stdout)
    assert {"index": 3, "p": "17", "q": "6"} in doc["convergents"]
    proc = run_cli("--format", "csv", "cf", "table")
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "constant,index,p,q,diophantine,matches_reference"


def test_sieve_subcommands():
    proc = run_cli("sieve", "table", "--curve", "k6.median", "--modulus", "7")
    doc = json.loads(proc.stdout)
    assert doc["admissible_count"] == 32
    proc = run_cli("sieve", "prove-empty", "--curve", "order4-half-quad", "--moduli", "8")
    doc = json.loads(proc.stdout)
    assert doc["certificate"] == 8 and doc["rechecked"] is True
    proc = run_cli("sieve", "prove-empty", "--curve", "order4-half-quad", "--moduli", "3,4,5,7,8")
    doc = json.loads(proc.stdout)
    assert doc["certificate"] == 4  # first empty modulus in the list


def test_quasi_subcommand():
    proc = run_cli("quasi", "--k", "3", "--quartile", "median", "--count", "5")
    doc = json.loads(proc.stdout)
    assert doc["track"] == "integer"
    assert len(doc["entries"]) == 5


def test_identities_subcommand():
    proc = run_cli("identities")
    doc = json.loads(proc.stdout)
    names = {f["name"]: f for f in doc["findings"]}
    assert names["k2.median-curve"]["status"] == "equal"
    assert names["order4-q1-reduction"]["status"] == "differs"
    assert names["order4-q1-reduction"]["difference"]


def test_reproduce_validates_and_is_deterministic():
    a = run_cli("reproduce", "--bound", "2000", "--surface-limit", "2000")
    b = run_cli("reproduce", "--bound", "2000", "--surface-limit", "2000", "--workers", "2")
    assert a.returncode == 0 and b.returncode == 0
    da, db = json.loads(a.stdout), json.loads(b.stdout)
    jsonschema.validate(da, load_schema("reproduce.schema.json"))
    from pellpascal.reproduce import strip_timing
    assert json.dumps(strip_timing(da), sort_keys=True) == json.dumps(strip_timing(db), sort_keys=True)


def test_exit_codes():
    assert run_cli("search", "--k", "7", "--bound", "10").returncode == 1
    assert run_cli("search", "--k", "2", "--bound", "1").returncode == 1
    assert run_cli("sieve", "table", "--curve", "k2.median", "--modulus", "1").returncode == 1
    assert run_cli("sieve", "prove-empty", "--curve", "k2.median", "--moduli", "x,y").returncode == 1
    assert run_cli("search", "--k", "2", "--bound", "100").returncode == 0


def test_env_override_bound(monkeypatch):
    import io
    from contextlib import redirect_stdout
    monkeypatch.setenv("PELLPASCAL_BOUND", "500")
    buf = io.StringIO()
    with redirect_stdout(buf):
        rc = cli.main(["search", "--k", "2"])
    assert rc == 0
    assert json.loads(buf.getvalue())["n_max"] == "500"


def test_text_format():
    proc = run_cli("--format", "text", "pell", "unit", "--d", "8")
    assert proc.returncode == 0
    assert "plus_one" in proc.stdout
