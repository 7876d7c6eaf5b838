import io
import json

import pytest

from genlce.cli import dump_report, generate, run_command


def _run(argv):
    out = io.StringIO()
    code = run_command(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    text = tmp_path / "w.txt"
    text.write_bytes(b"aabaab")
    queries = tmp_path / "q.txt"
    queries.write_text("1 4\n\n2 5\n")
    return tmp_path, text, queries


def test_query_answers(files):
    _, text, queries = files
    assert _run(["query", "--text", str(text), "--queries", str(queries)]) == (0, "3\n2\n")


def test_query_pow2_and_unordered(files):
    _, text, queries = files
    for extra in (["--engine", "pow2"], ["--mode", "unordered"], ["--t", "4"]):
        assert _run(["query", "--text", str(text), "--queries", str(queries), *extra]) \
            == (0, "3\n2\n")


def test_query_report_totals_are_phase_sums(files):
    tmp, text, queries = files
    report_path = tmp / "r.json"
    code, _ = _run(["query", "--text", str(text), "--queries", str(queries),
                    "--report", str(report_path)])
    assert code == 0
    report = json.loads(report_path.read_text())
    assert report["input"] == {"alphabet_size": 2, "mode": "ordered", "n": 6}
    assert report["answers"]["count"] == 2
    pre, query = report["phases"]["preprocessing"], report["phases"]["query"]
    for key in ("order_comparisons", "equality_tests", "memo_hits", "dsu_finds", "dsu_unions"):
        assert report["totals"][key] == pre[key] + query[key]
    assert set(report["config"]) >= {"engine", "t", "K", "backend"}


def test_ints_text(tmp_path):
    text = tmp_path / "w.ints"
    text.write_text("5 5 7 5 5 7\n")
    q = tmp_path / "q.txt"
    q.write_text("1 4\n")
    assert _run(["query", "--text", str(text), "--ints", "--queries", str(q)]) == (0, "3\n")


def test_runs_command(tmp_path):
    text = tmp_path / "w.txt"
    text.write_bytes(b"aaaa")
    assert _run(["runs", "--text", str(text)]) == (0, "1 4 1\n")
    report = tmp_path / "r.json"
    assert _run(["runs", "--text", str(text), "--report", str(report)])[0] == 0
    data = json.loads(report.read_text())
    assert data["runs"] == [[1, 4, 1]] and data["lce_queries"]["total"] > 0


def test_verify_passes(files):
    _, text, _ = files
    code, out = _run(["verify", "--text", str(text)])
    assert code == 0 and out.startswith("ok")


def test_verify_samples_long_text(tmp_path):
    text = tmp_path / "w.txt"
    text.write_bytes(bytes(generate("fibonacci", 700, 0)))
    code, _ = _run(["verify", "--text", str(text), "--max-n", "100"])
    assert code == 0


@pytest.mark.parametrize("argv,fragment", [
    (["query", "--text", "missing.txt", "--queries", "missing.txt"], "cannot read"),
    (["query", "--text", "{text}", "--queries", "{bad}"], "expected 'i j'"),
    (["query", "--text", "{text}", "--queries", "{far}"], "query #0"),
    (["query", "--text", "{text}", "--queries", "{q}", "--t", "8"], "power of 4"),
    (["query", "--text", "{text}", "--queries", "{q}", "--mode", "unordered",
      "--engine", "pow2"], "base4"),
])
def test_errors_exit_nonzero(files, capsys, argv, fragment):
    tmp, text, queries = files
    (tmp / "bad.txt").write_text("1 2 3\n")
    (tmp / "far.txt").write_text("1 99\n")
    names = {"text": text, "q": queries, "bad": tmp / "bad.txt", "far": tmp / "far.txt"}
    argv = [a.format(**names) for a in argv]
    code, out = _run(argv)
    assert code != 0 and out == ""
    assert fragment in capsys.readouterr().err


def test_bad_flags_exit_nonzero(capsys):
    assert _run(["bench", "--family", "nope", "--n", "5", "--q", "1"])[0] != 0
    assert _run([])[0] != 0


@pytest.mark.parametrize("family", ["random", "periodic", "fibonacci", "thue-morse"])
def test_bench_is_deterministic(family):
    argv = ["bench", "--family", family, "--n", "600", "--q", "300", "--seed", "4"]
    a = json.loads(_run(argv)[1])
    b = json.loads(_run(argv)[1])
    a.pop("timings")
    b.pop("timings")
    assert dump_report(a) == dump_report(b)
    assert a["input"]["family"] == family and a["answers"]["count"] == 300


def test_generated_families():
    assert generate("fibonacci", 8, 0) == [0, 1, 0, 0, 1, 0, 1, 0]
    assert generate("thue-morse", 8, 0) == [0, 1, 1, 0, 1, 0, 0, 1]
    assert generate("random", 50, 1) == generate("random", 50, 1)
