import json

import pytest

from limpack import io as gio
from limpack.cli import main
from limpack.generators import gen_gnp, gen_named
from limpack.harness import CSV_COLUMNS


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def petersen_file(tmp_path):
    path = tmp_path / "petersen.txt"
    gio.write_graph(gen_named("petersen"), path)
    return path


def test_gen_petersen(capsys, tmp_path):
    out_path = tmp_path / "p.txt"
    code, out, _ = run(capsys, "gen", "--family", "petersen", "--out", out_path)
    assert code == 0 and "n=10 m=15" in out
    assert gio.read_graph(out_path) == gen_named("petersen")


def test_gen_gnp_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    run(capsys, "gen", "--family", "gnp", "--n", 20, "--p", 0.3, "--seed", 7, "--out", a)
    run(capsys, "gen", "--family", "gnp", "--n", 20, "--p", 0.3, "--seed", 7, "--out", b)
    assert a.read_bytes() == b.read_bytes()
    assert gio.read_graph(a) == gen_gnp(20, 0.3, 7)


def test_gen_stdout_and_formats(capsys):
    code, out, err = run(capsys, "gen", "--family", "cycle", "--n", 4, "--format", "dimacs")
    assert code == 0 and out.startswith("p edge 4 4") and "n=4" in err


def test_gen_parity_error(capsys):
    code, _, err = run(capsys, "gen", "--family", "random-regular", "--n", 7, "--deg", 3)
    assert code == 1 and "error" in err


def test_bad_flags_exit_1(capsys):
    assert run(capsys, "gen", "--family", "nope")[0] == 1
    assert run(capsys, "frobnicate")[0] == 1


def test_bounds_petersen(capsys, petersen_file):
    code, out, _ = run(capsys, "bounds", petersen_file, "--k", 1)
    js = json.loads(out)
    assert code == 0
    assert js["lower"]["greedy_eq3"]["integer_form"] == 1
    assert js["upper"]["regular_prop1"]["integer_form"] == 2
    code, out, _ = run(capsys, "bounds", petersen_file, "--k", 4)
    js = json.loads(out)
    assert js["lower"]["trivial_n"]["integer_form"] == 10 == js["upper"]["trivial_n"]["integer_form"]


def test_bounds_c6_domination(capsys, tmp_path):
    path = tmp_path / "c6.dimacs"
    gio.write_graph(gen_named("cycle", 6), path, "dimacs")
    code, out, _ = run(capsys, "bounds", path, "--k", 1, "--exact-domination")
    assert code == 0 and json.loads(out)["upper"]["k_gamma"]["integer_form"] == 2


def test_bounds_errors(capsys, tmp_path, petersen_file):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 0\n")
    assert run(capsys, "bounds", bad, "--k", 1)[0] == 1
    assert run(capsys, "bounds", petersen_file, "--k", 0)[0] == 1
    assert run(capsys, "bounds", tmp_path / "missing.txt", "--k", 1)[0] == 1


def test_solve_exact(capsys, petersen_file):
    code, out, _ = run(capsys, "solve", petersen_file, "--algo", "exact", "--k", 1)
    js = json.loads(out)
    assert code == 0 and js["size"] == 1 and js["valid"] and js["status"] == "optimal"


def test_solve_greedy_gate(capsys, petersen_file):
    assert run(capsys, "solve", petersen_file, "--algo", "greedy", "--k", 2)[0] == 1
    code, out, _ = run(capsys, "solve", petersen_file, "--algo", "greedy", "--k", 1)
    assert code == 0 and json.loads(out)["size"] == 1


def test_solve_randomized(capsys, petersen_file):
    code, out, _ = run(capsys, "solve", petersen_file, "--algo", "randomized", "--k", 2, "--seed", 1)
    js = json.loads(out)
    assert code == 0 and js["bound_target"] == 2 and js["bound_met"] and js["valid"] and js["maximal"]
    again = run(capsys, "solve", petersen_file, "--algo", "randomized", "--k", 2, "--seed", 1)[1]
    assert again == out


def test_solve_randomized_trivial_route(capsys, petersen_file):
    code, out, _ = run(capsys, "solve", petersen_file, "--algo", "randomized", "--k", 5)
    js = json.loads(out)
    assert code == 0 and js["size"] == 10 and js["trivial"]


def test_solve_budget_exhausted(capsys, tmp_path):
    path = tmp_path / "big.txt"
    gio.write_graph(gen_gnp(45, 0.2, 3), path)
    code, out, _ = run(capsys, "solve", path, "--algo", "exact", "--k", 2, "--budget", 10)
    js = json.loads(out)
    assert code == 2 and js["status"] == "unknown" and js["optimum"] is None and js["best_found"] >= 1


def test_solve_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("0 1\n1 2\n"))
    code, out, _ = run(capsys, "solve", "-", "--k", 1)
    assert code == 0 and json.loads(out)["size"] == 1


def _corpus(tmp_path):
    d = tmp_path / "corpus"
    d.mkdir()
    gio.write_graph(gen_named("petersen"), d / "petersen.txt")
    gio.write_graph(gen_named("cycle", 6), d / "c6.dimacs", "dimacs")
    gio.write_graph(gen_named("complete", 5), d / "k5.g6", "graph6")
    return d


def test_experiment_small_corpus(capsys, tmp_path):
    d = _corpus(tmp_path)
    out_csv = tmp_path / "out.csv"
    code, _, err = run(capsys, "experiment", d, "--k-range", "1:2", "--seed", 3, "--out", out_csv)
    lines = out_csv.read_text().splitlines()
    assert code == 0 and "inconsistent=0" in err
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 7
    ids = [(line.split(",")[0], int(line.split(",")[8])) for line in lines[1:]]
    assert ids == sorted(ids)


def test_experiment_clamps_k(capsys, tmp_path):
    d = _corpus(tmp_path)
    code, out, err = run(capsys, "experiment", d, "--k-range", "1:9")
    assert code == 0 and "clamped" in err
    rows = [line.split(",") for line in out.splitlines()[1:]]
    k5 = [r for r in rows if r[0] == "k5-00000"]
    assert [int(r[8]) for r in k5] == [1, 2, 3, 4, 5]


def test_experiment_empty_corpus(capsys, tmp_path):
    d = tmp_path / "empty"
    d.mkdir()
    code, out, _ = run(capsys, "experiment", d)
    assert code == 0 and out == ",".join(CSV_COLUMNS) + "\n"


def test_experiment_large_graph_exact_unknown(capsys, tmp_path):
    d = tmp_path / "big"
    d.mkdir()
    gio.write_graph(gen_gnp(1000, 0.004, 5), d / "gnp1000.txt")
    code, out, _ = run(capsys, "experiment", d, "--k-range", "1", "--restarts", 5)
    row = dict(zip(CSV_COLUMNS, out.splitlines()[1].split(",")))
    assert code == 0
    assert row["exact"] == "unknown" and row["lb_eq1"] != "" and row["lb_eq3"] != ""
    assert row["ub_k_gamma"] == ""


def test_experiment_manifest(capsys, tmp_path):
    manifest = {
        "graphs": [
            {"id": "pet", "gen": {"family": "petersen"}},
            {"id": "reg", "gen": {"family": "random_regular", "n": 10, "degree": 3, "seed": 2}},
        ]
    }
    path = tmp_path / "m.json"
    path.write_text(json.dumps(manifest))
    code, out, _ = run(capsys, "experiment", path, "--seed", 1)
    assert code == 0 and len(out.splitlines()) == 1 + 4 + 4


def test_experiment_budget_exit_2(capsys, tmp_path):
    d = tmp_path / "c"
    d.mkdir()
    gio.write_graph(gen_gnp(20, 0.3, 1), d / "g.txt")
    code, out, _ = run(capsys, "experiment", d, "--k-range", "2", "--budget", 0)
    assert code == 2 and ",unknown," in out
