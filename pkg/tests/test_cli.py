import json

from spcops.cli import main
from spcops.io import dump_graph
from spcops.graph import Graph


def write_graph(tmp_path, g: Graph, name="g.json"):
    path = tmp_path / name
    path.write_text(dump_graph(g))
    return str(path)


def test_solve_copwin_exit_code(tmp_path, bowtie, capsys):
    path = write_graph(tmp_path, bowtie)
    rc = main(["solve", "--graph", path, "--cops", "2", "--exits", "0"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "verdict: copwin" in out
    assert "worst placement" in out


def test_solve_petersen_not_copwin(tmp_path, petersen, capsys):
    path = write_graph(tmp_path, petersen)
    rc = main(["solve", "--graph", path, "--cops", "2"])
    assert rc == 1
    assert "verdict: not copwin" in capsys.readouterr().out


def test_solve_bad_file_is_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("[]")
    rc = main(["solve", "--graph", str(bad), "--cops", "1"])
    assert rc == 2
    assert "error" in capsys.readouterr().err.lower()


def test_gen_solve_round_trip(tmp_path, capsys):
    rc = main(["gen", "--seed", "3", "--vertices", "8", "--blocks", "2"])
    assert rc == 0
    doc = capsys.readouterr().out
    path = tmp_path / "gen.json"
    path.write_text(doc)
    rc = main(["solve", "--graph", str(path), "--cops", "2", "--exits", "0"])
    assert rc == 0


def test_gen_deterministic(capsys):
    main(["gen", "--seed", "9", "--vertices", "7"])
    first = capsys.readouterr().out
    main(["gen", "--seed", "9", "--vertices", "7"])
    assert capsys.readouterr().out == first


def test_simulate_bowtie_optimal(tmp_path, bowtie, capsys):
    path = write_graph(tmp_path, bowtie)
    rc = main(["simulate", "--graph", path, "--exit", "0", "--robber", "optimal", "--check-claims"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["final_phase"] == "cops-won"
    assert doc["claim_violations"] == []


def test_simulate_rejects_non_sp(tmp_path, k4, capsys):
    path = write_graph(tmp_path, k4)
    rc = main(["simulate", "--graph", path, "--exit", "0"])
    assert rc == 2


def test_verify_small_batch(capsys):
    rc = main(["verify", "--count", "4", "--max-vertices", "8", "--seed", "1"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "games" in out and "FAIL" not in out


def test_verify_deterministic_output(capsys):
    main(["verify", "--count", "3", "--max-vertices", "7", "--seed", "5"])
    first = capsys.readouterr().out
    main(["verify", "--count", "3", "--max-vertices", "7", "--seed", "5"])
    assert capsys.readouterr().out == first


def test_verify_report_dir(tmp_path, capsys):
    rc = main([
        "verify", "--count", "2", "--max-vertices", "6", "--seed", "2",
        "--report-dir", str(tmp_path / "rep"),
    ])
    assert rc == 0
    names = {p.name for p in (tmp_path / "rep").iterdir()}
    assert "results.csv" in names
    assert any(n.endswith(".png") for n in names)
