import io
import json
import subprocess
import sys

import pytest

from cuntzgraph.algebra import S, adjoint, element_from_json, element_to_json
from cuntzgraph.cli import run
from cuntzgraph.cuntz import aux_hom, kawamura, pivot_hom
from cuntzgraph.graphs import graph_F, graph_from_json, graph_to_json, rose
from cuntzgraph.morphisms import GraphHom, PathHom, graph_hom_from_json, path_hom_from_json


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_embed_kawamura_case():
    code, out, _ = call("embed", "--p", "3", "--q", "2", "--k", "1", "--format", "text")
    assert code == 0
    assert out == (
        "O_3 -> M_1(O_2)  (s=2, m=3)\n"
        "S_1 |-> [[S_1]]\n"
        "S_2 |-> [[S_2S_1]]\n"
        "S_3 |-> [[S_2S_2]]\n"
        "verified: yes\n"
    )


def test_embed_congruence_failure():
    code, out, err = call("embed", "--p", "4", "--q", "3", "--k", "1")
    assert code == 2 and out == ""
    assert err.strip() == "error: (q-1) does not divide (p-1)k: q-1=2, (p-1)k=3"


def test_embed_wrong_s():
    code, _, err = call("embed", "--p", "3", "--q", "2", "--k", "1", "--s", "5")
    assert code == 2 and "s=2" in err


def test_embed_json_round_trips():
    code, out, _ = call("embed", "--p", "2", "--q", "2", "--k", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    R = rose(2)
    t1 = data["generators"]["S_1"]
    assert element_from_json(R, t1[1][0]).terms == S(R, ["e2", "e1"]).terms
    assert t1[0][0] == [] and t1[0][1] == []
    g = graph_hom_from_json(data["chain"]["g"])
    assert g == pivot_hom(3, 2)
    assert path_hom_from_json(data["chain"]["f"]) == aux_hom(3, 2)
    assert data["report"]["passed"] and data["matrix_report"]["passed"]


def test_embed_latex():
    code, out, _ = call("embed", "--p", "2", "--q", "2", "--k", "2", "--format", "latex")
    assert code == 0 and out.startswith("% O_2 -> M_2(O_2)")
    assert r"S_{1} &\longmapsto \begin{pmatrix} 0 & 0 \\ S_{2}S_{1} & S_{1} \end{pmatrix}" in out


def test_kawamura_text():
    code, out, _ = call("kawamura", "--m", "3", "--n", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[1:4] == ["e1 ↦ e′1", "e2 ↦ e′2e′1", "e3 ↦ e′2e′2"]
    assert lines[-1] == "verified: yes"


def test_kawamura_latex_and_json():
    code, out, _ = call("kawamura", "--m", "3", "--n", "2", "--format", "latex")
    assert code == 0 and "h(e_{2}) := e'_{2}e'_{1}" in out
    code, out, _ = call("kawamura", "--m", "5", "--n", "3", "--format", "json")
    data = json.loads(out)
    assert path_hom_from_json(data) == kawamura(5, 3)
    assert data["report"]["passed"] and data["report"]["unital"]
    code, _, err = call("kawamura", "--m", "4", "--n", "3")
    assert code == 2 and "divide" in err


@pytest.fixture
def write_json(tmp_path):
    def write(name, data):
        p = tmp_path / name
        p.write_text(json.dumps(data))
        return str(p)

    return write


def test_check_graph_hom(write_json):
    good = write_json("good.json", pivot_hom(5, 3).to_json())
    code, out, _ = call("check-graph-hom", good)
    assert code == 0 and out.startswith("admissible graph homomorphism: PASS")
    R2 = rose(2)
    bad = write_json("bad.json", GraphHom(R2, R2, {"v": "v"}, {"e1": "e1", "e2": "e1"}).to_json())
    code, out, err = call("check-graph-hom", bad, "--format", "json")
    assert code == 1 and out == ""
    report = json.loads(err)
    failing = [r for r in report["records"] if not r["passed"]]
    assert failing[0]["clause"] == "target-bijective" and failing[0]["witness"]["edge"] == "e1"


def test_check_path_hom(write_json):
    good = write_json("good.json", aux_hom(7, 3).to_json())
    assert call("check-path-hom", good)[0] == 0
    R2 = rose(2)
    bad = PathHom(R2, R2, {"v": "v"}, {"e1": R2.path(["e1"]), "e2": R2.path(["e1", "e1"])})
    code, _, err = call("check-path-hom", write_json("bad.json", bad.to_json()))
    assert code == 1 and "[FAIL] monotone" in err


def test_check_invalid_input(write_json, tmp_path):
    R2 = rose(2)
    data = GraphHom(R2, R2, {"v": "v"}, {"e1": "e1", "e2": "e2"}).to_json()
    data["emap"]["e2"] = "nope"
    code, _, err = call("check-graph-hom", write_json("x.json", data))
    assert code == 2 and err.startswith("error:")
    bad = tmp_path / "broken.json"
    bad.write_text("{")
    assert call("check-path-hom", str(bad))[0] == 2
    assert call("check-path-hom", str(tmp_path / "missing.json"))[0] == 2


def test_canon(write_json):
    R2 = rose(2)
    x = S(R2, "e2") * adjoint(S(R2, "e2"))
    path = write_json("x.json", {"graph": graph_to_json(R2), "element": element_to_json(x)})
    code, out, _ = call("canon", path)
    assert code == 0 and out == "P_v - S_{e1} S_{e1}*\n"
    code, out, _ = call("canon", path, "--format", "json")
    assert json.loads(out) == [
        {"coeff": 1, "alpha": {"vertex": "v"}, "beta": {"vertex": "v"}},
        {"coeff": -1, "alpha": ["e1"], "beta": ["e1"]},
    ]
    code, out, _ = call("canon", path, "--format", "latex")
    assert out == "P_{v} - S_{e_{1}}S_{e_{1}}^*\n"
    assert call("canon", write_json("y.json", {"element": []}))[0] == 2


def test_graphs():
    code, out, _ = call("graphs", "--family", "F", "--params", "5,3")
    assert code == 0
    data = json.loads(out)
    assert len(data["vertices"]) == 2 and len(data["edges"]) == 6
    assert graph_from_json(data) == graph_F(5, 3)
    code, out, _ = call("graphs", "--family", "rose", "--params", "3", "--format", "dot")
    assert out.count("->") == 3
    assert call("graphs", "--family", "F", "--params", "4,3")[0] == 2
    assert call("graphs", "--family", "G", "--params", "3")[0] == 2
    assert call("graphs", "--family", "line", "--params", "x")[0] == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        call("embed", "--p", "3")
    assert info.value.code == 2


def test_output_is_deterministic():
    argv = ("embed", "--p", "4", "--q", "3", "--k", "2", "--format", "json")
    assert call(*argv)[1] == call(*argv)[1]


def test_grid_small():
    code, out, _ = call("grid", "--max-p", "3", "--max-q", "3", "--max-k", "2")
    assert code == 0 and out.count("PASS") == 7


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cuntzgraph", "embed", "--p", "2", "--q", "2", "--k", "2"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert "S_1 |-> [[0, 0], [S_2S_1, S_1]]" in proc.stdout
