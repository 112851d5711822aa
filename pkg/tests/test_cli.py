import json
import subprocess
import sys

import pytest

from conftest import I
from fixtures import SVG_FIXTURES
from interval_ordering.cli import main
from interval_ordering.exposed import enumerate_full
from interval_ordering.instance import CostFunction, Instance, rat_json
from interval_ordering.solver import dp_solve
from interval_ordering.svg import render_svg

POW2 = CostFunction.pow2()


@pytest.fixture
def write(tmp_path):
    def _write(inst_or_text, name="inst.json"):
        p = tmp_path / name
        p.write_text(inst_or_text if isinstance(inst_or_text, str) else inst_or_text.dumps())
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_report(capsys, write):
    path = write(I((0, 3), (1, 2), cost=POW2))
    code, out, _ = run(capsys, "solve", path)
    assert code == 0
    assert "ordering: 2 1" in out and "total: 6" in out
    code, out, _ = run(capsys, "solve", path, "--json")
    rep = json.loads(out)
    assert rep["ordering"] == [2, 1] and rep["total"] == [6, 1]
    assert rep["exposed"][1] == [[[0, 1], [1, 1]], [[2, 1], [3, 1]]]


def test_solve_json_total_matches_library(capsys, write):
    inst = Instance.loads(
        '{"intervals": [{"start": [1, 3], "end": 4}, {"start": 0, "end": 2}, {"start": 1, "end": [5, 2]}],'
        ' "cost": {"kind": "polynomial", "params": {"coeffs": [0, 1, [1, 2]]}}}'
    )
    code, out, _ = run(capsys, "solve", write(inst), "--json", "--algorithm", "full")
    assert code == 0
    assert json.loads(out)["total"] == rat_json(dp_solve(inst, enumerate_full(inst)).total)


def test_solve_algorithms(capsys, write):
    path = write(I((0, 3), (1, 2), (2, 5), cost=POW2))
    totals = set()
    for alg in (["auto"], ["full"], ["super"], ["sbound"], ["alpha", "2"], ["subset-dp"], ["brute"]):
        code, out, _ = run(capsys, "solve", path, "--json", "--algorithm", *alg)
        assert code == 0, alg
        totals.add(tuple(json.loads(out)["total"]))
    assert len(totals) == 1


def test_solve_empty_and_threshold(capsys, write):
    code, out, _ = run(capsys, "solve", write('{"intervals": []}'))
    assert code == 0 and "total: 0" in out
    code, out, _ = run(capsys, "solve", write(Instance(I((0, 3), (1, 2)).intervals, POW2, 5)))
    assert "cost <= W: no" in out


def test_exit_codes(capsys, write):
    nine = write(I(*[(k, k + 2) for k in range(9)], cost=POW2))
    assert run(capsys, "solve", nine, "--algorithm", "brute")[0] == 3
    assert run(capsys, "solve", write("{bad json"))[0] == 2
    assert run(capsys, "solve", "/nonexistent/file.json")[0] == 2
    assert run(capsys, "solve", write(I((0, 1)).dumps()))[0] == 2  # no cost
    assert run(capsys, "solve", nine, "--algorithm", "alpha")[0] == 2
    assert run(capsys, "enumerate", write(I((0, 1), (2, 3))), "--mode", "pairwise")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["solve"])
    assert exc.value.code == 2


def test_infeasible_exit_code(capsys, write, monkeypatch):
    from interval_ordering import cli, exposed

    path = write(I((0, 2), (1, 3), cost=POW2))

    def starved(inst):
        parts = exposed.enumerate_full(inst)
        parts.masks = parts.masks[:1]
        return parts

    monkeypatch.setattr("interval_ordering.solver.enumerate_full", starved)
    assert run(capsys, "solve", path, "--algorithm", "full")[0] == 4
    assert cli.INFEASIBLE == 4


def test_enumerate(capsys, write):
    path = write(I((0, 2), (1, 3)))
    code, full, _ = run(capsys, "enumerate", path)
    assert code == 0 and full.strip().endswith("count: 4")
    _, intervals, _ = run(capsys, "enumerate", path, "--mode", "intervals")
    _, alpha1, _ = run(capsys, "enumerate", path, "--mode", "alpha", "1")
    assert intervals == alpha1 == full
    assert full.splitlines()[0] == "[0,1)  length 1"


def test_classify(capsys, write):
    code, out, _ = run(capsys, "classify", write(I((0, 3), (1, 2))))
    assert code == 0 and "laminar: yes" in out and "max proper subintervals: 1" in out


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "nested", "--n", "2")
    obj = json.loads(out)
    assert [(iv["start"], iv["end"]) for iv in obj["intervals"]] == [([2, 1], [4, 1]), ([0, 1], [4, 1])]
    code, out, _ = run(capsys, "generate", "partition", "--items", "1", "1", "2", "--eps", "1", "--x0", "4",
                       "--slopes", "1", "2", "3")
    assert json.loads(out)["W"] == [9, 1]
    outs = [run(capsys, "generate", "random", "--n", "5", "--seed", "7")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    assert Instance.loads(outs[0]).dumps() == outs[0]
    _, frac, _ = run(capsys, "generate", "partition", "--items", "2", "3", "--eps", "1/3", "--x0", "3/2")
    assert Instance.loads(frac).dumps() == frac
    assert run(capsys, "generate", "partition", "--items", "1", "--x0", "1")[0] == 2


def test_verify(capsys, write):
    code, out, _ = run(capsys, "verify", "--random", "6", "--count", "100", "--seed", "1")
    assert code == 0 and out.startswith("ok: 100")
    assert run(capsys, "verify", write('{"intervals": []}'))[0] == 0
    bad = I((0, 4), (1, 2), (2, 3), cost=CostFunction.pow2(declared_class="sub"))
    code, out, _ = run(capsys, "verify", write(bad))
    assert code == 1
    assert "suspect" in out and "'sub'" in out
    shrunk = Instance.loads(out.split("minimal failing instance:\n", 1)[1])
    assert shrunk.n == 2
    assert run(capsys, "verify", "--random", "9", "--count", "1")[0] == 3


def test_plot(capsys, write, tmp_path):
    inst, order = SVG_FIXTURES["seven"]
    path = write(inst)
    out_file = tmp_path / "out.svg"
    code, _, _ = run(capsys, "plot", path, "--ordering", ",".join(str(j + 1) for j in order), "-o", str(out_file))
    assert code == 0
    assert out_file.read_text() == render_svg(inst, order)
    code, out, _ = run(capsys, "plot", path, "--solve")
    assert code == 0 and out.startswith("<?xml")
    assert run(capsys, "plot", path, "--ordering", "1,2,3")[0] == 2
    assert run(capsys, "plot", path, "--ordering", "1,1,2,3,4,5,6")[0] == 2
    assert run(capsys, "plot", path)[0] == 2


def test_module_entry_point(write):
    path = write(I((0, 3), (1, 2), cost=POW2))
    res = subprocess.run([sys.executable, "-m", "interval_ordering", "solve", path], capture_output=True, text=True)
    assert res.returncode == 0 and "total: 6" in res.stdout
