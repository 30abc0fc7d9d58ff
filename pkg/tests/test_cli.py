import json

from puzzlecalc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_coeff_ht(capsys):
    code, out, _ = run(capsys, "coeff", "--theory", "ht",
                       "--mu", "0101", "--nu", "1010")
    assert code == 0
    assert out.splitlines() == ["0110: 1", "1001: 1", "1010: -1*y1 + 1*y4"]


def test_coeff_k(capsys):
    code, out, _ = run(capsys, "coeff", "--theory", "k",
                       "--mu", "0101", "--nu", "1010")
    assert code == 0
    assert out.splitlines() == ["0101: -1", "0110: 1", "1001: 1"]


def test_coeff_h_identity(capsys):
    code, out, _ = run(capsys, "coeff", "--theory", "h",
                       "--mu", "0011", "--nu", "0011")
    assert code == 0
    assert out.splitlines() == ["0011: 1"]


def test_coeff_json_round_trip(capsys):
    code, out, _ = run(capsys, "coeff", "--theory", "kt",
                       "--mu", "0101", "--nu", "1010", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 4 and doc["k"] == 2
    assert doc["theory"] == "kt"
    assert doc["puzzle_count"] == 6
    assert doc["coefficients"]["0101"] == [{"coef": -1, "exp": [1, 0, 0, -1]}]


def test_coeff_bad_word(capsys):
    code, _, err = run(capsys, "coeff", "--theory", "h",
                       "--mu", "01x1", "--nu", "1010")
    assert code == 1
    assert "error" in err


def test_coeff_mismatched_lengths(capsys):
    code, _, err = run(capsys, "coeff", "--theory", "h",
                       "--mu", "0101", "--nu", "10100")
    assert code == 1


def test_puzzles_count(capsys):
    code, out, _ = run(capsys, "puzzles", "--mu", "0101", "--nu", "1010")
    assert code == 0
    assert out.splitlines()[0] == "6 puzzles"


def test_puzzles_lambda_filter(capsys):
    code, out, _ = run(capsys, "puzzles", "--mu", "0101", "--nu", "1010",
                       "--lambda", "1001")
    assert code == 0
    assert out.splitlines()[0] == "2 puzzles"


def test_puzzles_ascii_render(capsys):
    code, out, _ = run(capsys, "puzzles", "--mu", "01", "--nu", "10",
                       "--render", "ascii")
    assert code == 0
    assert "/" in out and "\\" in out


def test_puzzles_svg_files(tmp_path, capsys):
    code, out, _ = run(capsys, "puzzles", "--mu", "0101", "--nu", "1010",
                       "--render", "svg", "--out", str(tmp_path))
    assert code == 0
    files = sorted(p.name for p in tmp_path.iterdir())
    assert files == [f"puzzle-0101-1010-{i:03d}.svg" for i in range(6)]
    assert (tmp_path / files[0]).read_text().startswith("<svg")


def test_trace_text(capsys):
    code, out, _ = run(capsys, "trace", "--mu", "010", "--nu", "100")
    assert code == 0
    assert out.startswith("root @")
    assert "equivariant" in out
    assert "codim=" in out


def test_trace_json(capsys):
    code, out, _ = run(capsys, "trace", "--mu", "010", "--nu", "100", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["tree"]["branch"] is None
    assert doc["tree"]["children"]


def test_trace_invalid_pair(capsys):
    code, _, err = run(capsys, "trace", "--mu", "100", "--nu", "010")
    assert code == 1


def test_rank_essential(capsys):
    code, out, _ = run(capsys, "rank", "essential",
                       "--n", "5", "--dots", "1,5;3,3")
    assert code == 0
    assert out.strip() == "(3,3) r<=0; (1,5) r<=3"


def test_rank_envelope(capsys):
    code, out, _ = run(capsys, "rank", "envelope",
                       "--n", "5", "--dots", "1,5;3,3")
    assert code == 0
    assert out.strip() == "lambda=01011 mu=11010"


def test_rank_fixed_points(capsys):
    code, out, _ = run(capsys, "rank", "fixed-points",
                       "--n", "4", "--dots", "2,2;1,3")
    assert code == 0
    members = out.split()
    assert members == sorted(members)
    assert all(len(w) == 4 and w.count("1") == 2 for w in members)


def test_rank_fixed_points_single_word(capsys):
    code, out, _ = run(capsys, "rank", "fixed-points",
                       "--n", "4", "--dots", "2,2;1,3", "--word", "0011")
    assert code == 0
    assert out.strip() == "0011: in"


def test_rank_covers(capsys):
    code, out, _ = run(capsys, "rank", "covers", "--n", "2", "--dots", "2,2")
    assert code == 0
    assert out.split() == ["1,2"]


def test_rank_dots_matrix(capsys):
    code, out, _ = run(capsys, "rank", "dots", "--n", "3", "--dots", "1,2")
    assert code == 0
    assert len(out.splitlines()) == 3


def test_rank_malformed_dots(capsys):
    code, _, err = run(capsys, "rank", "dots", "--n", "3", "--dots", "9,9")
    assert code == 1


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "2")
    assert code == 0
    assert out.splitlines()[-1] == "OK"


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "2",
                       "--suite", "hall", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert [s["suite"] for s in doc["suites"]] == ["hall"]


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--max-n", "2", "--suite", "nope")
    assert code == 1
