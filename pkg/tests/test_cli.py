import json
import subprocess
import sys
from pathlib import Path

import pytest

from rittlab.fixtures import fixture_text

D6_CTX = fixture_text("d6_x6")
X6_POLY = "field: Q\npoly: 6:1\n"
SKEW = "field: F2\nskew: 2:1 1:1\n"


def run_cli(*args):
    proc = subprocess.run([sys.executable, "-m", "rittlab.cli", *args],
                          capture_output=True, text=True)
    return proc


def json_lines(output: str) -> list[dict]:
    records = []
    for line in output.splitlines():
        if line.startswith("{"):
            records.append(json.loads(line))
    return records


@pytest.fixture()
def ctx_file(tmp_path):
    path = tmp_path / "d6.ctx"
    path.write_text(D6_CTX)
    return str(path)


@pytest.fixture()
def poly_file(tmp_path):
    path = tmp_path / "x6.poly"
    path.write_text(X6_POLY)
    return str(path)


class TestGroupVerify:
    def test_all_theorems(self, ctx_file):
        proc = run_cli("group", "verify", ctx_file)
        assert proc.returncode == 0
        records = json_lines(proc.stdout)
        status = {r["theorem"]: r["status"] for r in records}
        assert status["ritt1"] == "pass"
        assert status["mon"] == "pass"
        assert status["aut"] == "pass"
        assert status["div"] == "pass"
        assert status["rho"] == "pass"
        assert status["indec"] == "hypothesis-not-met"

    def test_theorem_selection(self, ctx_file):
        proc = run_cli("group", "verify", ctx_file, "--theorems", "ritt1,mon")
        records = json_lines(proc.stdout)
        assert [r["theorem"] for r in records] == ["ritt1", "mon"]

    def test_json_only(self, ctx_file):
        proc = run_cli("group", "verify", ctx_file, "--json")
        assert all(line.startswith("{") for line in proc.stdout.splitlines())

    def test_schema(self, ctx_file):
        proc = run_cli("group", "verify", ctx_file, "--json")
        for r in json_lines(proc.stdout):
            assert set(r) == {"context", "theorem", "status", "details"}
            assert r["status"] in ("pass", "fail", "hypothesis-not-met")

    def test_unknown_theorem_usage_error(self, ctx_file):
        proc = run_cli("group", "verify", ctx_file, "--theorems", "nope")
        assert proc.returncode == 2


class TestGroupChains:
    def test_listing(self, ctx_file):
        proc = run_cli("group", "chains", ctx_file)
        assert proc.returncode == 0
        assert "2 maximal chains" in proc.stdout
        assert "Chain" not in proc.stdout  # human text, not reprs

    def test_walk(self, ctx_file):
        proc = run_cli("group", "chains", ctx_file, "--walk", "0", "1")
        assert proc.returncode == 0
        assert "exchange walk from chain 0 to chain 1: 1 steps" in proc.stdout
        walks = [r for r in json_lines(proc.stdout) if r["theorem"] == "walk"]
        assert len(walks) == 2


class TestPolyCommands:
    def test_decompose(self, poly_file):
        proc = run_cli("poly", "decompose", poly_file)
        assert proc.returncode == 0
        assert "2 complete decomposition(s)" in proc.stdout
        records = [r for r in json_lines(proc.stdout)
                   if r["theorem"] == "decompose"]
        assert len(records) == 2

    def test_invariants(self, poly_file):
        proc = run_cli("poly", "invariants", poly_file)
        assert proc.returncode == 0
        status = {r["theorem"]: r for r in json_lines(proc.stdout)}
        assert "|Aut| = 2" in status["aut"]["details"]
        assert status["gamma"]["details"].startswith("infinite")
        assert "core degree 2" in status["factorable-core"]["details"]

    def test_wild_characteristic_is_an_error(self, tmp_path):
        path = tmp_path / "wild.poly"
        path.write_text("field: F2\npoly: 4:1 2:1\n")
        proc = run_cli("poly", "decompose", str(path))
        assert proc.returncode == 1
        assert "additive" in proc.stderr


class TestAdditiveCommand:
    def test_factor(self, tmp_path):
        path = tmp_path / "f.skew"
        path.write_text(SKEW)
        proc = run_cli("additive", "factor", str(path))
        assert proc.returncode == 0
        assert "2 complete factorization(s)" in proc.stdout
        ore = [r for r in json_lines(proc.stdout) if r["theorem"] == "ore"]
        assert ore[0]["status"] == "pass"


class TestLaurentCommand:
    def test_branch_table(self):
        proc = run_cli("laurent-branch", "--field", "F7", "--poly", "3:1 1:1",
                       "--precision", "10")
        assert proc.returncode == 0
        assert "theta = 2" in proc.stdout
        assert "inertia cycle on branches: (0 1 2)" in proc.stdout
        branches = [r for r in json_lines(proc.stdout)
                    if r["theorem"] == "branch"]
        assert len(branches) == 3

    def test_default_precision(self):
        proc = run_cli("laurent-branch", "--field", "F7", "--poly", "3:1")
        assert proc.returncode == 0
        assert "precision 6" in proc.stdout


class TestCounterexampleCommand:
    def test_p7(self):
        proc = run_cli("counterexample", "--prime", "7")
        assert proc.returncode == 0
        assert "|Aut(f)| = 6, |Aut(outer)| = 1, |Aut(inner)| = 2" in proc.stdout
        assert "does NOT divide" in proc.stdout

    def test_bad_prime(self):
        proc = run_cli("counterexample", "--prime", "5")
        assert proc.returncode == 1
        assert "error" in proc.stderr

    def test_custom_pair_from_files(self, tmp_path):
        outer = tmp_path / "outer.rat"
        outer.write_text("field: F7\nnum: 2:1\nden: 0:1\n")
        inner = tmp_path / "inner.rat"
        inner.write_text("field: F7\nnum: 2:1\nden: 0:1\n")
        proc = run_cli("counterexample", "--prime", "7",
                       "--outer", str(outer), "--inner", str(inner))
        assert proc.returncode == 0
        assert "|Aut(f)| = 2" in proc.stdout


class TestFixturesRunAll:
    def test_exit_zero_and_matrix(self):
        proc = run_cli("fixtures", "run-all")
        assert proc.returncode == 0
        assert "theorem matrix" in proc.stdout
        records = json_lines(proc.stdout)
        assert not any(r["status"] == "fail" for r in records)
        contexts = {r["context"] for r in records}
        assert "m16_regular" in contexts
        assert "counterexample(p=13)" in contexts

    def test_byte_identical_across_runs(self):
        first = run_cli("fixtures", "run-all")
        second = run_cli("fixtures", "run-all")
        assert first.stdout == second.stdout
        assert first.stdout.encode() == second.stdout.encode()


class TestUsageErrors:
    def test_missing_file(self):
        proc = run_cli("group", "verify", "/nonexistent/x.ctx")
        assert proc.returncode == 2

    def test_no_command(self):
        proc = run_cli()
        assert proc.returncode == 2
