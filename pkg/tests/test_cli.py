import math
import subprocess
import sys

import pytest

from hardgadget.cli import main
from hardgadget.instances import parse_instance


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_h3_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.h3", tmp_path / "b.h3"
    assert main(["gen-h3", "--n", "6", "--m", "3", "--seed", "9", "--out", str(a)]) == 0
    assert main(["gen-h3", "--n", "6", "--m", "3", "--seed", "9", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert main(["gen-h3", "--n", "6", "--m", "3", "--seed", "10", "--out", str(b)]) == 0
    assert a.read_bytes() != b.read_bytes()


def test_gen_h3_modes(tmp_path, capsys):
    from hardgadget.cc_engine import is_two_colorable

    out = tmp_path / "h.h3"
    assert main(["gen-h3", "--n", "6", "--m", "4", "--mode", "2colorable",
                 "--seed", "3", "--out", str(out)]) == 0
    assert is_two_colorable(parse_instance(out.read_text(), "h3"))
    assert main(["gen-h3", "--n", "6", "--m", "5", "--mode", "odd-cycle-style",
                 "--out", str(out)]) == 0
    h = parse_instance(out.read_text(), "h3")
    assert max(h.occurrence_counts()) == 3
    # infeasible parameters are input errors
    assert main(["gen-h3", "--n", "4", "--m", "100", "--out", str(out)]) == 2


def test_reduce_cc_example(tmp_path, capsys):
    h3 = tmp_path / "t.h3"
    h3.write_text("h3 3 1\ne 1 2 3\n")
    sg, layout = tmp_path / "t.sg", tmp_path / "t.layout"
    code = main(["reduce-cc", str(h3), "--out", str(sg), "--layout-out", str(layout)])
    assert code == 0
    g = parse_instance(sg.read_text(), "sg")
    assert g.n == 40
    assert layout.read_text().startswith("hyper 3\nflower 1 cycle")


def test_cc_pipeline_yes_decode(tmp_path, capsys):
    h3 = tmp_path / "p.h3"
    assert main(["gen-h3", "--n", "5", "--m", "3", "--seed", "4",
                 "--mode", "odd-cycle-style", "--out", str(h3)]) == 0
    part = tmp_path / "p.p"
    layout = tmp_path / "p.layout"
    graph = tmp_path / "p.sg"
    assert main(["yes-cc", str(h3), "--out", str(part), "--graph-out", str(graph),
                 "--layout-out", str(layout)]) == 0
    # decode recovers a coloring that the lemmas accept
    col = tmp_path / "p.col"
    assert main(["decode-cc", str(part), "--layout", str(layout), "--out", str(col)]) == 0
    coloring = parse_instance(col.read_text(), "col")
    h = parse_instance(h3.read_text(), "h3")
    assert coloring.makes_bichromatic(h)
    assert main(["verify-lemmas", str(part), "--graph", str(graph),
                 "--layout", str(layout)]) == 0
    out = capsys.readouterr().out
    assert out.count("pass") == 5


def test_feasible_cc_exit_codes(tmp_path, capsys):
    sg = tmp_path / "g.sg"
    # K4 minus one pair: optimum 1
    sg.write_text("sg 4\n+ 1 3\n+ 1 4\n+ 2 3\n+ 2 4\n+ 3 4\n")
    part = tmp_path / "g.p"
    assert main(["feasible-cc", str(sg), "--t", "1", "--out", str(part)]) == 0
    assert parse_instance(part.read_text(), "p").n == 4
    assert main(["feasible-cc", str(sg), "--t", "0"]) == 1


def test_solve_cc(tmp_path, capsys):
    sg = tmp_path / "g.sg"
    sg.write_text("sg 4\n+ 1 3\n+ 1 4\n+ 2 3\n+ 2 4\n+ 3 4\n")
    code, out, _ = run_cli(["solve-cc", str(sg), "--q", "inf"], capsys)
    assert code == 0 and out.strip() == "value 1"
    code, out, _ = run_cli(["solve-cc", str(sg), "--q", "2"], capsys)
    assert code == 0 and out.startswith("value ")


def test_hc_pipeline(tmp_path, capsys):
    lin2 = tmp_path / "i.lin2"
    asg = tmp_path / "i.asg"
    assert main(["gen-lin2", "--q", "2", "--n0", "4", "--m", "4", "--seed", "2",
                 "--mode", "satisfiable", "--out", str(lin2),
                 "--assignment-out", str(asg)]) == 0
    wg = tmp_path / "i.wg"
    assert main(["reduce-hc", str(lin2), "--rho", "-0.7", "--out", str(wg)]) == 0
    graph = parse_instance(wg.read_text(), "wg")
    assert abs(graph.total_weight() - 1.0) <= 1e-12
    assert "dropped-selfpair-mass" in dict(graph.meta)
    tree = tmp_path / "i.tree"
    code, out, _ = run_cli(["yes-tree", str(lin2), "--assignment", str(asg),
                            "--report-bound", "--out", str(tree)], capsys)
    assert code == 0 and out.startswith("level-series-bound")
    bound = float(out.split()[-1])
    code, out, _ = run_cli(["eval-hc", str(tree), "--graph", str(wg)], capsys)
    assert code == 0
    value = float(out.splitlines()[0].split()[1])
    assert value >= bound - 1e-9


def test_solve_hc(tmp_path, capsys):
    wg = tmp_path / "t.wg"
    wg.write_text("wg 3 3\n1 2 1\n1 3 1\n2 3 1\n")
    tree = tmp_path / "t.tree"
    code, out, _ = run_cli(["solve-hc", str(wg), "--out", str(tree)], capsys)
    assert code == 0 and out.strip() == "value 8"
    assert tree.read_text().strip() == "((1,2),3)"


def test_gamma_command(capsys):
    code, out, _ = run_cli(["gamma", "--rho", "0", "--a", "0.3", "--b", "0.5"], capsys)
    assert code == 0 and float(out) == pytest.approx(0.15, abs=1e-10)


def test_gamma_grid(tmp_path, capsys):
    out = tmp_path / "grid.csv"
    assert main(["gamma", "--rho", "-0.5", "--grid", "4", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "a,b,value" and len(lines) == 1 + 25


def test_curves_single_max(tmp_path, capsys):
    out = tmp_path / "single.csv"
    assert main(["curves", "--panel", "single", "--rho", "-0.7", "--lo", "0.6",
                 "--hi", "0.88", "--step", "0.002", "--threads", "1",
                 "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "beta,value"
    rows = [tuple(map(float, line.split(","))) for line in lines[1:]]
    beta, value = max(rows, key=lambda r: r[1])
    assert beta == pytest.approx(0.88, abs=1e-9)
    assert value == pytest.approx(0.909, abs=5e-4)


def test_curves_threads_identical_bytes(tmp_path, capsys):
    one, two = tmp_path / "t1.csv", tmp_path / "t2.csv"
    base = ["curves", "--panel", "gw", "--step", "0.01"]
    assert main(base + ["--threads", "1", "--out", str(one)]) == 0
    assert main(base + ["--threads", "3", "--out", str(two)]) == 0
    assert one.read_bytes() == two.read_bytes()


def test_ratio_output(capsys):
    code, out, _ = run_cli(["ratio"], capsys)
    assert code == 0
    assert out.strip() == "0.9159 / 0.9189 = 0.996735226902"


def test_input_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.h3"
    bad.write_text("h3 3 1\ne 1 1 2\n")
    assert main(["reduce-cc", str(bad)]) == 2


def test_console_entrypoint_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "hardgadget", "ratio"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "0.9967" in proc.stdout
