import csv
import io
import json
import subprocess
import sys

import pytest

from spectough.cli import SWEEP_COLUMNS, run
from spectough.codecs import write_graph
from spectough.families import OneTough, TIntTough, build_extremal
from spectough.graph import Graph, build_complete, build_cycle


def call(argv):
    out = io.StringIO()
    code = run(argv, out)
    return code, out.getvalue()


@pytest.fixture
def one_tough_file(tmp_path):
    path = tmp_path / "g.g6"
    path.write_bytes(write_graph(build_extremal(OneTough(16, 2)), "graph6"))
    return str(path)


@pytest.fixture
def cycle_file(tmp_path):
    path = tmp_path / "c.el"
    path.write_bytes(write_graph(build_cycle(16), "edge-list"))
    return str(path)


def test_dsr(cycle_file):
    code, out = call(["dsr", cycle_file])
    body = json.loads(out)
    assert code == 0
    assert abs(body["lambda1"] - 64) < 1e-9
    assert body["method"] == "power" and body["residual"] <= 1e-10


def test_dsr_forced_jacobi(one_tough_file, cycle_file):
    code, out = call(["dsr", one_tough_file, "--max-iter", "1"])
    assert code == 0 and json.loads(out)["method"] == "jacobi"
    # on a regular graph the all-ones start is already the Perron vector
    assert json.loads(call(["dsr", cycle_file, "--max-iter", "1"])[1])["method"] == "power"


def test_toughness(one_tough_file):
    code, out = call(["toughness", one_tough_file])
    assert code == 0
    assert json.loads(out) == {"tau": "2/3", "witness": [0, 1], "components": 3}


def test_toughness_limit_needs_flag(one_tough_file):
    assert call(["toughness", one_tough_file, "--limit", "30"])[0] == 2
    assert call(["toughness", one_tough_file, "--limit", "30", "--allow-exponential"])[0] == 0


def test_toughness_complete_graph_is_input_error(tmp_path):
    path = tmp_path / "k.g6"
    path.write_bytes(write_graph(build_complete(5), "graph6"))
    assert call(["toughness", str(path)])[0] == 3


def test_bounds_and_wiener(one_tough_file):
    code, out = call(["bounds", one_tough_file])
    assert code == 0 and json.loads(out)["lower"] == 18.125
    code, out = call(["wiener", one_tough_file])
    assert code == 0 and json.loads(out)["W"] == 145


def test_family_round_trip(tmp_path):
    code, out = call(["family", "--kind", "t-int", "--n", "14", "--t", "1"])
    assert code == 0
    path = tmp_path / "f.g6"
    path.write_text(out)
    code, out = call(["wiener", str(path)])
    assert json.loads(out)["W2"] == 127


def test_family_kinds():
    assert call(["family", "--kind", "one-tough", "--n", "16", "--delta", "2", "--output-format", "edge-list"])[1].startswith("16 95\n")
    assert call(["family", "--kind", "t-frac", "--n", "14", "--t", "1/3"])[0] == 0
    assert call(["family", "--kind", "t-frac", "--n", "14", "--q", "3"])[0] == 0
    assert call(["family", "--kind", "split", "--s", "2", "--parts", "5,3,3"])[0] == 0
    assert call(["family", "--kind", "one-tough", "--n", "4", "--delta", "2"])[0] == 2
    assert call(["family", "--kind", "one-tough", "--n", "16"])[0] == 2
    assert call(["family", "--kind", "t-int", "--n", "14", "--t", "1/2"])[0] == 2


def test_quotient():
    code, out = call(["quotient", "--kind", "rdelta", "--n", "16", "--delta", "2"])
    body = json.loads(out)
    assert code == 0
    assert body["entries"] == [["2", "24", "2"], ["4", "11", "2"], ["2", "12", "1"]]
    assert body["charpoly"] == ["1", "-14", "-89", "-26"]
    assert body["equitable"] and body["block_sizes"] == [2, 12, 2]
    for argv in (["--kind", "rs", "--n", "16", "--s", "2"], ["--kind", "rsdelta", "--n", "40", "--s", "2", "--delta", "3"],
                 ["--kind", "rts", "--n", "14", "--t", "1", "--s", "1"], ["--kind", "rint", "--n", "14", "--t", "1"]):
        assert call(["quotient", *argv])[0] == 0


def test_verify_checks(one_tough_file, cycle_file):
    for argv in (["--check", "lemma1", cycle_file], ["--check", "bounds", one_tough_file],
                 ["--check", "lemma2", "--kind", "one-tough", "--n", "16", "--delta", "2"],
                 ["--check", "compmin", "--n", "8", "--s", "2", "--c", "3"],
                 ["--check", "perron", "--n", "16", "--s", "2", "--c", "3", "--p", "1"],
                 ["--check", "charpoly", "--kind", "rdelta", "--n", "16", "--delta", "2"],
                 ["--check", "charpoly", "--kind", "rts", "--n", "20", "--t", "1/2", "--s", "1"]):
        code, out = call(["verify", *argv])
        assert code == 0, argv
        assert json.loads(out)["passed"]


def test_verify_usage_errors():
    assert call(["verify", "--check", "lemma1"])[0] == 2
    assert call(["verify", "--check", "charpoly", "--kind", "rs"])[0] == 2
    assert call(["verify", "--check", "compmin", "--n", "8"])[0] == 2


def test_check(one_tough_file, cycle_file):
    code, out = call(["check", "--theorem", "t1", "--param", "2", one_tough_file])
    assert code == 0 and json.loads(out)["verdict"] == "ExtremalMatch"
    code, out = call(["check", "--theorem", "t1", "--param", "2", cycle_file])
    assert code == 0 and json.loads(out)["verdict"] == "SpectralConditionFails"
    assert call(["check", "--theorem", "t2ii", "--param", "2", cycle_file])[0] == 2
    assert call(["check", "--theorem", "t1", "--param", "1/2", cycle_file])[0] == 2


def test_sweep_json_and_csv():
    argv = ["sweep", "--model", "random", "--theorem", "t2i", "--param", "1", "--n", "14", "--count", "15", "--seed", "3"]
    code, out = call(argv)
    body = json.loads(out)
    assert code == 0 and body["passed"] and body["cases_run"] == 15
    code, text = call(argv + ["--output", "csv"])
    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == SWEEP_COLUMNS
    assert len(rows) == 16
    assert [int(r[1]) for r in rows[1:]] == list(range(15))


def test_sweep_exhaustive():
    code, out = call(["sweep", "--model", "exhaustive", "--theorem", "t2i", "--param", "1", "--max-n", "5"])
    assert code == 0 and json.loads(out)["cases_run"] == 0
    assert call(["sweep", "--model", "exhaustive", "--theorem", "t2i", "--param", "1"])[0] == 2


def test_repeated_output_is_byte_identical(one_tough_file):
    for argv in (["dsr", one_tough_file], ["toughness", one_tough_file],
                 ["sweep", "--model", "random", "--theorem", "t1", "--param", "2", "--n", "16",
                  "--count", "10", "--seed", "7", "--min-delta", "2"]):
        assert call(argv) == call(argv)


def test_exit_codes_for_bad_input(tmp_path):
    assert call(["bogus"])[0] == 2
    assert call([])[0] == 2
    assert call(["dsr", str(tmp_path / "missing.g6")])[0] == 3
    bad = tmp_path / "bad.el"
    bad.write_text("3 2\n0 1\n1 1\n")
    assert call(["dsr", str(bad)])[0] == 3
    disconnected = tmp_path / "d.el"
    disconnected.write_bytes(write_graph(Graph(4, [(0, 1), (2, 3)]), "edge-list"))
    assert call(["dsr", str(disconnected)])[0] == 3
    assert call(["dsr", str(tmp_path / "x.unknown")])[0] in (2, 3)


def test_stdout_and_stderr_separation(tmp_path):
    bad = tmp_path / "bad.el"
    bad.write_text("3 2\n0 1\n")
    proc = subprocess.run([sys.executable, "-m", "spectough.cli", "dsr", str(bad)], capture_output=True, text=True)
    assert proc.returncode == 3
    assert proc.stdout == ""
    assert "line" in proc.stderr


def test_stdin_input():
    data = write_graph(build_extremal(TIntTough(14, 1)), "edge-list")
    proc = subprocess.run([sys.executable, "-m", "spectough.cli", "wiener", "-"], input=data, capture_output=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["W2"] == 127
    g6 = write_graph(build_extremal(TIntTough(14, 1)), "graph6")
    proc = subprocess.run([sys.executable, "-m", "spectough.cli", "wiener", "-"], input=g6, capture_output=True)
    assert json.loads(proc.stdout)["W2"] == 127
