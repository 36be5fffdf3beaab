import json

import pytest

from ptlab.cli import main
from ptlab.graph_io import read_digraph, read_graph
from ptlab.reports import validate_report


def run(args):
    return main([str(a) for a in args])


def test_gen_and_recognize_roundtrip(tmp_path):
    out = tmp_path / "rs.el"
    assert run(["--seed", 3, "gen", "rs", "--k", 5, "--ap", "exact",
                "--out", out]) == 0
    g = read_graph(out)
    assert g.n == 30
    sidecar = json.loads((tmp_path / "rs.el.json").read_text())
    assert sidecar["construction"] == "rs"
    assert sidecar["packing"]["kind"] == "triangle"
    assert sidecar["farness"] > 0
    assert set(sidecar["parts"]) == {"X", "Y", "Z"}

    rec = tmp_path / "rec.json"
    assert run(["recognize", "--property", "triangle-free", "--in", out,
                "--out", rec]) == 0
    report = json.loads(rec.read_text())
    validate_report(report)
    assert report["results"]["member"] is False
    assert len(report["results"]["witness"]) == 3


def test_gen_gadgets_from_sidecar(tmp_path):
    rs = tmp_path / "rs.el"
    run(["gen", "rs", "--k", 3, "--out", rs])
    gadget = tmp_path / "gadget.el"
    assert run(["gen", "c5-gadget", "--from", rs, "--out", gadget]) == 0
    g = read_graph(gadget)
    assert g.n == 5 * 18
    side = json.loads((tmp_path / "gadget.el.json").read_text())
    assert side["packing"]["kind"] == "inducedC5"

    poset = tmp_path / "poset.el"
    assert run(["gen", "poset-gadget", "--from", rs, "--out", poset]) == 0
    d = read_digraph(poset)
    assert d.n == 18
    rec = tmp_path / "rec.json"
    assert run(["recognize", "--property", "poset", "--in", poset, "--out", rec]) == 0
    assert json.loads(rec.read_text())["results"]["member"] is False


def test_gen_reproducible(tmp_path):
    a, b = tmp_path / "a.el", tmp_path / "b.el"
    run(["--seed", 11, "gen", "gnp", "--n", 20, "--p", "0.4", "--out", a])
    run(["--seed", 11, "gen", "gnp", "--n", 20, "--p", "0.4", "--out", b])
    assert a.read_text() == b.read_text()
    c = tmp_path / "c.el"
    run(["--seed", 12, "gen", "gnp", "--n", 20, "--p", "0.4", "--out", c])
    assert a.read_text() != c.read_text()


def test_test_and_curve(tmp_path):
    g = tmp_path / "g.el"
    run(["--seed", 2, "gen", "gnp", "--n", 18, "--p", "0.5", "--out", g])
    rep = tmp_path / "rep.json"
    assert run(["--seed", 5, "test", "--in", g, "--tester", "triple", "--t", 5,
                "--trials", 300, "--out", rep]) == 0
    data = json.loads(rep.read_text())
    validate_report(data)
    r = data["results"]["report"]
    assert r["trials"] == 300 and r["queries_per_trial"] == 15

    csv_out = tmp_path / "curve.csv"
    assert run(["--seed", 5, "--format", "csv", "curve", "--in", g,
                "--tester", "quadruple", "--budgets", "1,2,4",
                "--trials", 200, "--out", csv_out]) == 0
    lines = csv_out.read_text().strip().splitlines()
    assert lines[0].startswith("budget,")
    assert len(lines) == 4


def test_universal_needs_property(tmp_path):
    g = tmp_path / "g.el"
    run(["gen", "gnp", "--n", 8, "--p", "0.5", "--out", g])
    assert run(["test", "--in", g, "--tester", "universal", "--d", "4",
                "--trials", 10]) == 2


def test_decompose_and_distance(tmp_path):
    g = tmp_path / "g.el"
    run(["--seed", 4, "gen", "cograph", "--n", 9, "--out", g])
    rep = tmp_path / "dec.json"
    modified = tmp_path / "mod.el"
    assert run(["decompose", "--in", g, "--beta", "0", "--out", rep,
                "--out-graph", modified]) == 0
    data = json.loads(rep.read_text())
    assert data["results"]["edited_pairs"] == 0
    assert all(len(p) == 1 for p in data["results"]["parts"])
    assert read_graph(modified) == read_graph(g)

    dist = tmp_path / "dist.json"
    assert run(["distance", "--in", g, "--property", "cograph", "--out", dist]) == 0
    assert json.loads(dist.read_text())["results"]["distance"] == 0


def test_search_extremal_cli(tmp_path):
    rep = tmp_path / "ext.json"
    gout = tmp_path / "ext.el"
    assert run(["--seed", 1, "search-extremal", "--n", 5, "--beta", "1/5",
                "--effort", 40, "--out", rep, "--out-graph", gout]) == 0
    data = json.loads(rep.read_text())
    validate_report(data)
    assert data["results"]["record"]["p3_density"] == pytest.approx(0.0016)
    assert read_graph(gout).n == 5


def test_exit_codes(tmp_path):
    assert run(["recognize", "--property", "cograph", "--in",
                tmp_path / "missing.el"]) == 3
    bad = tmp_path / "bad.el"
    bad.write_text("2 1\n0 0\n")
    assert run(["recognize", "--property", "cograph", "--in", bad]) == 3
    assert run(["gen", "gnp", "--p", "0.5", "--out", tmp_path / "x.el"]) == 2
    with pytest.raises(SystemExit) as err:
        run(["bogus-command"])
    assert err.value.code == 2


def test_seed_env_fallback(tmp_path, monkeypatch):
    monkeypatch.setenv("PTLAB_SEED", "21")
    a = tmp_path / "a.el"
    run(["gen", "gnp", "--n", 12, "--p", "0.5", "--out", a])
    b = tmp_path / "b.el"
    run(["--seed", 21, "gen", "gnp", "--n", 12, "--p", "0.5", "--out", b])
    assert a.read_text() == b.read_text()


def test_global_flags_after_subcommand(tmp_path):
    a = tmp_path / "a.el"
    assert run(["gen", "gnp", "--n", 6, "--p", "1.0", "--seed", 3, "--out", a]) == 0
    assert read_graph(a).m == 15


def test_pipeline_hardness_cli(tmp_path):
    out = tmp_path / "hardness.csv"
    assert run(["--seed", 9, "--format", "csv", "pipeline-hardness",
                "--k", "3", "--d", 10, "--trials", 50, "--retries", 4,
                "--out", out]) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0].startswith("k,graph,property,farness")
    assert len(lines) == 5  # header + 2 gadget rows + 2 control rows


def test_pipeline_easy_cli(tmp_path):
    out = tmp_path / "easy.json"
    assert run(["--seed", 9, "pipeline-easy", "--n", 9, "--distances", "1",
                "--budgets", "1,4", "--trials", 60, "--out", out]) == 0
    data = json.loads(out.read_text())
    validate_report(data)
    assert len(data["results"]["rows"]) == 4


def test_verify_suite_cli(capsys):
    assert run(["verify-suite", "gadgets"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)
