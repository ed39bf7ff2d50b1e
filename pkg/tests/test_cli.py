import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from hullgap.bench import BenchRecord, bench_one, read_csv, run_bench, write_csv
from hullgap.cli import main
from hullgap.io import InputFormatError, parse_instance, parse_points

SVG = "{http://www.w3.org/2000/svg}"


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_parse_instance_file():
    inst = parse_instance("# header\n\neps 1/2\n3   # first\n0.25\n-2/4\n")
    assert inst.eps == parse_instance("eps 0.5\n1\n").eps
    assert [str(v) for v in inst.values] == ["3", "1/4", "-1/2"]


@pytest.mark.parametrize("text, line", [
    ("eps 1\n0\nx\n", 3),
    ("3\n", 1),
    ("eps 0\n1\n", 1),
    ("eps 1\n1 2\n", 2),
    ("eps 1\n1/0\n", 2),
])
def test_instance_errors_carry_line(text, line):
    with pytest.raises(InputFormatError) as exc:
        parse_instance(text, "f.txt")
    assert exc.value.line_no == line
    assert f"f.txt:{line}" in str(exc.value)


def test_instance_without_values():
    with pytest.raises(InputFormatError, match="no values"):
        parse_instance("eps 1\n# nothing\n")


def test_parse_points_names():
    ps = parse_points("0 0  # L1\n1/2 1/2\n")
    assert ps.names == ("L1", "P2")


def test_decide_closeness_duplicates(tmp_path, capsys):
    f = write(tmp_path, "a.txt", "eps 1\n3\n3\n")
    assert run(capsys, "decide", "closeness", f)[:2] == (10, "yes witness=(1,2)")
    assert run(capsys, "decide", "strict", f)[:2] == (0, "no")
    assert run(capsys, "decide", "weak", f)[:2] == (0, "no")


def test_decide_strict_and_weak(tmp_path, capsys):
    f = write(tmp_path, "a.txt", "eps 1\n0\n1/2\n")
    assert run(capsys, "decide", "strict", f)[:2] == (10, "yes witness=(1,2)")
    g = write(tmp_path, "b.txt", "eps 1\n0\n1\n")
    assert run(capsys, "decide", "weak", g)[:2] == (10, "yes witness=(1,2)")
    assert run(capsys, "decide", "strict", g)[:2] == (0, "no")


def test_decide_point_problems(tmp_path, capsys):
    inst = write(tmp_path, "s.txt", "eps 1\n0\n2\n")
    pts = str(tmp_path / "s.pts")
    assert run(capsys, "construct", inst, "-o", pts)[0] == 0
    assert run(capsys, "decide", "api", pts)[:2] == (0, "no")
    assert run(capsys, "decide", "convex-position", pts)[:2] == (10, "yes")

    edge = write(tmp_path, "e.txt", "eps 1\n0\n1\n")
    edge_pts = str(tmp_path / "e.pts")
    run(capsys, "construct", edge, "-o", edge_pts)
    assert run(capsys, "decide", "convex-position", edge_pts)[:2] == (0, "no witness=T1=(1/2,1/2)")
    # instance files are accepted directly and labelled the same way
    assert run(capsys, "decide", "convex-position", edge)[:2] == (0, "no witness=T1=(1/2,1/2)")

    square = write(tmp_path, "q.pts", "0 0\n2 0\n2 2\n0 2\n1 1\n")
    assert run(capsys, "decide", "api", square)[:2] == (10, "yes witness=P5=(1,1)")


def test_decide_errors(tmp_path, capsys):
    bad = write(tmp_path, "bad.txt", "eps 1\n0\nzz\n")
    code, _, err = run(capsys, "decide", "strict", bad)
    assert code == 1 and "bad.txt:3" in err
    code, _, err = run(capsys, "decide", "strict", str(tmp_path / "missing.txt"))
    assert code == 1
    badpts = write(tmp_path, "bad.pts", "0 0\n1\n")
    code, _, err = run(capsys, "decide", "api", badpts)
    assert code == 1 and "bad.pts:2" in err
    with pytest.raises(SystemExit) as exc:
        main(["decide", "nonsense", bad])
    assert exc.value.code == 1


def test_decide_is_deterministic(tmp_path, capsys):
    f = write(tmp_path, "a.txt", "eps 1\n0\n1/4\n1/2\n7\n7\n")
    first = run(capsys, "decide", "closeness", f)
    assert all(run(capsys, "decide", "closeness", f) == first for _ in range(3))


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--trials", "1", "--n-max", "1", "--seed", "0")
    assert code == 0
    assert "FAIL" not in out


def test_verify_catches_mutant(capsys):
    code, out, _ = run(capsys, "verify", "--trials", "200", "--n-max", "8", "--seed", "3", "--mutant")
    assert code == 1
    assert "FAIL  characterization" in out
    assert "minimal failing case" in out


def test_verify_rejects_zero_trials(capsys):
    assert run(capsys, "verify", "--trials", "0")[0] == 1


def test_bench_examples():
    rec = bench_one("eps-spaced", 4)
    assert rec.answer is False and rec.orient_calls > 0
    rec = bench_one("all-equal", 8, problem="closeness")
    assert rec.answer is True
    assert bench_one("half-close", 64).answer is True


def test_bench_csv_round_trip(tmp_path, capsys):
    out = tmp_path / "b.csv"
    code, text, _ = run(capsys, "bench", "--sizes", "16,32", "--families", "uniform,eps-spaced,all-equal,half-close",
                        "--csv", str(out))
    assert code == 0
    assert out.read_text().splitlines()[0] == "family,n,orient_calls,wall_ns"
    rows = read_csv(out)
    assert len(rows) == 8
    assert all(r.orient_calls > 0 for r in rows)
    again = tmp_path / "c.csv"
    write_csv(rows, again)
    assert read_csv(again) == rows


def test_bench_rejects_bad_input(tmp_path, capsys):
    assert run(capsys, "bench", "--sizes", "1", "--csv", str(tmp_path / "x.csv"))[0] == 1
    assert run(capsys, "bench", "--sizes", "8", "--families", "bogus", "--csv", str(tmp_path / "x.csv"))[0] == 1
    assert run(capsys, "bench", "--sizes", "8", "--csv", str(tmp_path / "no" / "dir.csv"))[0] == 1


def test_bench_counts_are_reproducible():
    a = run_bench([64], ["uniform"], seed=5)
    b = run_bench([64], ["uniform"], seed=5)
    assert [r.orient_calls for r in a] == [r.orient_calls for r in b]
    assert isinstance(a[0], BenchRecord)


def svg_elements(path):
    root = ET.parse(path).getroot()
    return root, [(el.tag.replace(SVG, ""), el.get("class", "").split(), el) for el in root.iter()]


@pytest.mark.parametrize("values, triangles", [("0\n2\n4\n", 0), ("0\n1/2\n", 1), ("0\n", 0)])
def test_plot_element_counts(tmp_path, capsys, values, triangles):
    f = write(tmp_path, "p.txt", "eps 1\n" + values)
    svg = tmp_path / "p.svg"
    assert run(capsys, "plot", f, "--svg", str(svg))[0] == 0
    _, els = svg_elements(svg)
    n = len(values.split())
    circles = [c for tag, c, _ in els if tag == "circle"]
    assert len(circles) == 2 * n
    assert sum(tag == "line" and "tangent" in c for tag, c, _ in els) == n
    assert sum(tag == "polygon" and "hull" in c for tag, c, _ in els) == 1
    assert sum(tag == "polyline" and "parabola" in c for tag, c, _ in els) == 2
    assert sum(tag == "polygon" and "triangle" in c for tag, c, _ in els) == triangles
    assert sum("L" in c for c in circles) == n and sum("T" in c for c in circles) == n


def test_plot_unwritable(tmp_path, capsys):
    f = write(tmp_path, "p.txt", "eps 1\n0\n")
    assert run(capsys, "plot", f, "--svg", str(tmp_path / "nope" / "x.svg"))[0] == 1


def test_console_entry_point(tmp_path):
    f = write(tmp_path, "a.txt", "eps 1\n3\n3\n")
    proc = subprocess.run([sys.executable, "-m", "hullgap", "decide", "closeness", f],
                          capture_output=True, text=True)
    assert proc.returncode == 10
    assert proc.stdout.strip() == "yes witness=(1,2)"
