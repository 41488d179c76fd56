import json
import re

import pytest

from periodic_colouring.cli import main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def chi_t_rows(text):
    return [int(m.group(2)) for m in re.finditer(r"^  t=(\d+)\s+(\d+)", text, re.M)]


def field(text, name):
    return re.search(rf"^{re.escape(name)}\s+(\S+)", text, re.M).group(1)


def test_analyze_cycle(capsys):
    code, out, _ = run(capsys, "analyze", "cycle:6", "--t", "1..6")
    assert code == 0
    assert field(out, "chi_o") == "6"
    assert chi_t_rows(out) == [1, 2, 3, 2, 1, 6]


def test_analyze_path_and_complete(capsys):
    _, out, _ = run(capsys, "analyze", "path:3")
    assert field(out, "chi_o") == "6"
    _, out, _ = run(capsys, "analyze", "complete:4")
    assert field(out, "chi_o") == "1" and field(out, "chi") == "4"


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "petal:3x4", "--format", "json", "--t", "3")
    data = json.loads(out)
    assert code == 0 and data["chi_o"] == 4 and data["chi_t"][0]["t"] == 3
    assert data["theorems"]["divisors"] is True


def test_edge_list_file(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text("# a square\n10 11\n11 12\n12 13\n13 10\n")
    _, out, _ = run(capsys, "analyze", str(path))
    assert field(out, "chi_o") == "4" and field(out, "vertices") == "4"


@pytest.mark.parametrize("flag, value", [("--circular", "4"), ("--periodic", "3")])
def test_colour_verify_round_trip(tmp_path, capsys, flag, value):
    witness = tmp_path / "w.json"
    code, _, _ = run(capsys, "colour", "petal:3x4", flag, value, "--out", str(witness))
    assert code == 0
    code, out, _ = run(capsys, "verify", "petal:3x4", str(witness))
    assert (code, out) == (0, "ok\n")


def test_tampered_circular_witness(tmp_path, capsys):
    witness = tmp_path / "w.json"
    run(capsys, "colour", "cycle:6", "--circular", "6", "--out", str(witness))
    record = json.loads(witness.read_text())
    record["entries"][0][2] = (record["entries"][0][2] + 1) % 6
    witness.write_text(json.dumps(record))
    code, out, _ = run(capsys, "verify", "cycle:6", str(witness))
    assert code == 1 and "violation" in out


def test_tampered_periodic_witness(tmp_path, capsys):
    witness = tmp_path / "w.json"
    run(capsys, "colour", "cycle:6", "--periodic", "3", "--out", str(witness))
    record = json.loads(witness.read_text())
    record["colours"][0] = 2
    witness.write_text(json.dumps(record))
    code, out, _ = run(capsys, "verify", "cycle:6", str(witness))
    assert code == 1 and out.startswith("path ")


def test_witness_for_other_graph(tmp_path, capsys):
    witness = tmp_path / "w.json"
    run(capsys, "colour", "cycle:6", "--circular", "3", "--out", str(witness))
    code, _, err = run(capsys, "verify", "cycle:7", str(witness))
    assert code == 2 and "different graph" in err


def test_infeasible_circular_request(capsys):
    code, _, err = run(capsys, "colour", "cycle:5", "--circular", "3")
    assert code == 1 and "cycle-length condition" in err


def test_text_and_dot_formats(capsys):
    _, out, _ = run(capsys, "colour", "cycle:4", "--periodic", "2", "--format", "text")
    assert out == "0 1 0 1\n"
    _, out, _ = run(capsys, "colour", "cycle:4", "--circular", "4", "--format", "dot")
    assert out.startswith("graph G {") and out.count(" -- ") == 4
    _, out, _ = run(capsys, "analyze", "cycle:4", "--format", "dot")
    assert "fillcolor" in out


def test_survey_characterisation_on_random_graphs(tmp_path, capsys):
    code, out, _ = run(capsys, "survey", "--random", "100", "--n", "4..8", "--seed", "1",
                       "--predicates", "characterisation,divisors", "--out", str(tmp_path))
    assert code == 0
    assert re.search(r"^characterisation\s+(\d+)/\1 pass", out, re.M)


def test_survey_cycle_bridge(tmp_path, capsys):
    code, out, _ = run(capsys, "survey", "cycle:3..12", "--predicates", "cycle_bridge", "--out", str(tmp_path))
    assert code == 0 and "10/10 pass" in out


def test_survey_average_degree(tmp_path, capsys):
    code, out, _ = run(capsys, "survey", "complete:5..7", "--random", "30", "--n", "6..8", "--seed", "3",
                       "--predicates", "average_degree", "--out", str(tmp_path))
    assert code == 0 and re.search(r"^average_degree\s+[1-9]\d*/\d+ pass", out, re.M)


def test_survey_reports_counterexamples(tmp_path, capsys):
    out_dir = tmp_path / "cx"
    code, out, _ = run(capsys, "survey", "cycle:5", "--predicates", "class_one", "--out", str(out_dir))
    assert code == 1 and "FAIL" in out
    dumped = list(out_dir.iterdir())
    assert len(dumped) == 1 and "0 1" in dumped[0].read_text()


def test_survey_json_is_deterministic(tmp_path, capsys):
    argv = ["survey", "--random", "20", "--seed", "5", "--format", "json", "--out", str(tmp_path)]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second and json.loads(first)["corpus_size"] == 20


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "mickey:3")
    assert code == 0 and out.startswith("# mickey:3: n=25 m=27")


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "cycle:6", "--t", "4")
    assert code == 0 and out == "oracle chi_o = 6\noracle chi_4 = 2\n"


@pytest.mark.parametrize(
    "argv",
    [["analyze", "no-such-file"], ["analyze", "cycle:2"], ["analyze", "cycle:5", "--t", "9"],
     ["colour", "cycle:5"], ["survey", "--predicates", "bogus"], ["analyze", "cycle:5", "--t", "a..b"]],
)  # fmt: skip
def test_input_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_disconnected_input(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text("0 1\n2 3\n")
    code, _, err = run(capsys, "analyze", str(path))
    assert code == 2 and "connected" in err


def test_cap_exceeded(capsys):
    code, _, err = run(capsys, "oracle", "cycle:12")
    assert code == 3 and "capped" in err


def test_parse_range():
    assert parse_range("2..4") == [2, 3, 4] and parse_range("5") == [5]
