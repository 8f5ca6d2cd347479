import json

import pytest

from aso_extremal import graph6
from aso_extremal.canon import canonical_code
from aso_extremal.cli import run
from aso_extremal.families import s_prime
from aso_extremal.report import render, write_report
from aso_extremal.verify import Verdict, verify_unicyclic_min


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_k4(capsys):
    code, out, _ = invoke(capsys, "compute", "--graph6", "C~")
    assert code == 0
    assert "aso=12.72792206" in out


def test_compute_isolated_edge(capsys):
    code, out, err = invoke(capsys, "compute", "--graph6", "A_")
    assert code == 2
    assert "isolated edge: ASO undefined" in err
    assert len(err.strip().splitlines()) == 1


def test_compute_input_file(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_text("C~\nCh\n")
    code, out, _ = invoke(capsys, "compute", "--input", str(path), "--format", "json")
    assert code == 0
    rows = json.loads(out)["results"]
    assert [r["graph6"] for r in rows] == ["C~", "Ch"]
    assert rows[1]["aso"] == pytest.approx(6.4721360, abs=1e-7)


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["compute", "--graph6", "C~~"],
    ["construct", "--family", "cycle", "--n", "2"],
    ["verify", "unicyclic-max", "--n", "3"],
    ["verify", "nonsense"],
    ["enumerate", "--class", "connected", "--n", "12"],
    ["verify", "lemma-ee1", "--format", "xml"],
])
def test_usage_errors(capsys, argv):
    code, _, err = invoke(capsys, *argv)
    assert code == 2
    assert err.strip()


def test_verify_unicyclic_max_json(capsys):
    code, out, _ = invoke(capsys, "verify", "unicyclic-max", "--n", "5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["config"]["n"] == 5 and doc["config"]["seed"] == 0
    (v,) = doc["verdicts"]
    assert v["pass"] is True and v["counterexamples"] == []
    top = v["witnesses"][0]
    assert canonical_code(graph6.decode(top["graph6"])) == canonical_code(s_prime(5))
    assert top["is_extremal"] is True
    assert set(v) == {"claim", "params", "pass", "scanned", "runtime_ms", "stats", "witnesses", "counterexamples"}


def test_construct_and_enumerate(capsys):
    code, out, _ = invoke(capsys, "construct", "--family", "connectivity_extremal", "--n", "5", "--k", "2")
    assert code == 0 and "aso=17.8471292" in out
    code, out, _ = invoke(capsys, "enumerate", "--class", "unicyclic", "--n", "6")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == ">>class=unicyclic;n=6;count=13" and len(lines) == 14
    for line in lines[1:]:
        graph6.decode(line)
    code, out, _ = invoke(capsys, "enumerate", "--class", "connected", "--n", "5", "--mode", "vertex", "--k", "1")
    assert code == 0 and out.startswith(">>class=connected|vertex=1;n=5;")


def test_failing_verdict_exits_one(capsys, monkeypatch):
    import aso_extremal.cli as cli

    def bad(*args, **kwargs):
        v = Verdict("unicyclic-max", {"n": 5})
        v.passed = False
        return v

    monkeypatch.setattr(cli, "verify_unicyclic_max", bad)
    code, _, _ = invoke(capsys, "verify", "unicyclic-max", "--n", "5")
    assert code == 1


def test_empty_json_report():
    assert render([], "json").strip() == "[]"


def test_csv_single_pass_row():
    text = render([verify_unicyclic_min(5)], "csv")
    header, row = text.strip().splitlines()
    assert header.startswith("claim,params,pass,scanned")
    fields = row.split(",")
    assert fields[0] == "unicyclic-min"
    assert ",true," in row
    assert header.split(",").index("counterexamples") == 5


def test_write_report_unwritable(tmp_path):
    with pytest.raises(OSError):
        write_report([], "json", tmp_path)


def test_lemma_ee1_sweep_csv(capsys):
    code, out, _ = invoke(capsys, "verify", "lemma-ee1", "--n-lo", "9", "--n-hi", "200", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("# config:")
    assert len(lines) - 2 == 192


def test_out_file(tmp_path, capsys):
    dest = tmp_path / "r.json"
    code, out, _ = invoke(capsys, "verify", "unicyclic-min", "--n", "6", "--format", "json", "--out", str(dest))
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["verdicts"][0]["pass"] is True


def test_every_graph6_redecodes(capsys):
    code, out, _ = invoke(capsys, "verify", "connectivity-max", "--n", "6", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["verdicts"]) == 2 * 5
    for v in doc["verdicts"]:
        for c in v["witnesses"] + v["counterexamples"]:
            graph6.decode(c["graph6"])


@pytest.mark.parametrize("argv", [
    ["verify", "edge-deletion", "--n", "6"],
    ["verify", "connectivity-max", "--n", "6"],
    ["verify", "unicyclic-max", "--n", "8"],
])
def test_byte_identical_across_jobs(capsys, argv):
    outputs = []
    for jobs in ("1", "2", "3"):
        code, out, _ = invoke(capsys, *argv, "--format", "json", "--jobs", jobs)
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1] == outputs[2]


def test_timing_flag(capsys):
    _, out, _ = invoke(capsys, "verify", "unicyclic-min", "--n", "5", "--format", "json", "--timing")
    assert json.loads(out)["verdicts"][0]["runtime_ms"] is not None
