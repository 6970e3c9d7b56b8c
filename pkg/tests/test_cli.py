import json
import subprocess
import sys

import pytest

from egosim.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def triangle_file(tmp_path):
    p = tmp_path / "tri.txt"
    p.write_text("a b\nb c\na c\n")
    return str(p)


@pytest.fixture
def cycle_file(tmp_path):
    p = tmp_path / "c4.txt"
    p.write_text("1 2\n2 3\n3 4\n4 1\n")
    return str(p)


def test_signature_a21_node9(capsys):
    code, out, _ = run(capsys, "signature", "--input", "a21-signatures", "--node", "9")
    assert code == 0
    assert out == "9: 0.75 0.25 0.00 0.00 0.00 0.00 0.00\n"


def test_signature_triangle_all(capsys, triangle_file):
    code, out, _ = run(capsys, "signature", "-i", triangle_file)
    assert code == 0
    assert out.splitlines() == ["a: 0.33 0.33 0.33", "b: 0.33 0.33 0.33", "c: 0.33 0.33 0.33"]


def test_signature_karate_node1(capsys):
    code, out, _ = run(capsys, "signature", "-i", "karate", "--node", "1")
    values = out.split(":", 1)[1].split()
    assert code == 0
    assert len(values) == 18
    assert sum(map(float, values)) == pytest.approx(1.0, abs=0.05)


def test_signature_csv_and_json(capsys, triangle_file):
    _, out, _ = run(capsys, "signature", "-i", triangle_file, "--output-format", "csv", "--precision", "3")
    assert out.splitlines()[:2] == ["label,p1,p2,p3", "a,0.333,0.333,0.333"]
    _, out, _ = run(capsys, "signature", "-i", triangle_file, "--output-format", "json")
    assert json.loads(out)[0]["degrees"] == [2, 2, 2]


def test_signature_isolated_reported_per_node(capsys, tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("a b\nc c\n")
    code, out, err = run(capsys, "signature", "-i", str(p))
    assert code == 1
    assert out.splitlines() == ["a: 0.50 0.50", "b: 0.50 0.50"]
    assert "'c'" in err


def test_matrix_a21_within_tolerance(capsys):
    from oracles import read_published_matrix
    code, out, _ = run(capsys, "matrix", "-i", "a21-signatures")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "," + ",".join(str(i) for i in range(1, 22))
    got = [[float(x) for x in line.split(",")[1:]] for line in lines[1:]]
    want = read_published_matrix()
    assert max(abs(a - b) for ra, rb in zip(got, want) for a, b in zip(ra, rb)) <= 0.015


def test_matrix_triangle(capsys, triangle_file):
    _, out, _ = run(capsys, "matrix", "-i", triangle_file)
    assert out.splitlines()[1:] == ["a,1.00,1.00,1.00", "b,1.00,1.00,1.00", "c,1.00,1.00,1.00"]


def test_matrix_karate_json(capsys):
    _, out, _ = run(capsys, "matrix", "-i", "karate", "--output-format", "json")
    doc = json.loads(out)
    m = doc["matrix"]
    assert len(m) == 34
    assert all(m[i][i] == 1.0 for i in range(34))
    assert all(m[i][j] == m[j][i] for i in range(34) for j in range(34))


def test_rank_summaries(capsys, cycle_file):
    assert run(capsys, "rank", "-i", "karate")[1].splitlines()[-1] == "top=28 bottom=12"
    assert run(capsys, "rank", "-i", "a21-signatures")[1].splitlines()[-1] == "top=12 bottom=9"
    out = run(capsys, "rank", "-i", cycle_file)[1]
    assert out.splitlines()[-1] == "top=1 bottom=4"
    assert "high similarity node: 1" in out


def test_rank_csv_summary_on_stderr(capsys):
    code, out, err = run(capsys, "rank", "-i", "karate", "--output-format", "csv")
    assert out.splitlines()[0] == "rank,label,score"
    assert out.splitlines()[1].startswith("1,28,")
    assert err.strip() == "top=28 bottom=12"


def test_precision_does_not_change_ranking(capsys):
    ranks = []
    for p in ("0", "2", "17"):
        out = run(capsys, "rank", "-i", "karate", "--precision", p)[1]
        ranks.append([line.split("\t")[1] for line in out.splitlines()[1:35]])
    assert ranks[0] == ranks[1] == ranks[2]


def test_similar(capsys, triangle_file):
    assert run(capsys, "similar", "-i", "a21-signatures", "--node", "18", "--top", "1")[1] == "19\t1.00\n"
    assert run(capsys, "similar", "-i", "a21-signatures", "--node", "4", "--top", "2")[1] == "16\t1.00\n11\t0.99\n"
    assert run(capsys, "similar", "-i", triangle_file, "--node", "a", "-k", "2")[1] == "b\t1.00\nc\t1.00\n"


def test_similar_errors(capsys, triangle_file):
    code, _, err = run(capsys, "similar", "-i", triangle_file, "--node", "zz")
    assert code == 1 and "zz" in err
    with pytest.raises(SystemExit) as info:
        main(["similar", "-i", triangle_file, "--node", "a", "--top", "0"])
    assert info.value.code != 0


def test_output_file_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["matrix", "-i", "karate", "-o", str(a), "--threads", "1"]) == 0
    assert main(["matrix", "-i", "karate", "-o", str(b), "--threads", "4"]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_datasets(capsys):
    code, out, _ = run(capsys, "datasets")
    assert code == 0
    assert "karate" in out and "email" in out
    _, out, _ = run(capsys, "datasets", "--output-format", "json")
    assert {d["name"] for d in json.loads(out)} >= {"karate", "a21-signatures"}


@pytest.mark.parametrize("argv", [
    ["rank", "-i", "no-such-dataset-or-file"],
    ["signature", "-i", "karate", "--node", "99"],
])
def test_error_paths(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ""
    assert len(err.strip().splitlines()) == 1


def test_bad_input_file(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("1 2 3\n")
    code, _, err = run(capsys, "rank", "-i", str(p))
    assert code == 1 and "line 1" in err
    p.write_text("")
    assert run(capsys, "rank", "-i", str(p))[0] == 1


def test_precision_bounds(triangle_file):
    with pytest.raises(SystemExit):
        main(["matrix", "-i", triangle_file, "--precision", "18"])


def test_csv_input_format(tmp_path, capsys):
    p = tmp_path / "edges.data"
    p.write_text("source,target\nx,y\ny,z\n")
    code, out, _ = run(capsys, "signature", "-i", str(p), "--format", "csv", "--node", "y")
    assert code == 0 and out == "y: 0.50 0.25 0.25\n"


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "egosim.cli", "rank", "-i", "a21-signatures"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "top=12 bottom=9"
