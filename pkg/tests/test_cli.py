"""End-to-end command-line tests driving main() with captured output."""

import json

import pytest

from crystalline.cli import main
from crystalline.crystal import build_graph
from crystalline.tableaux import t_lambda


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# enumerate


def test_enumerate_letter_crystal_row_count(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--type", "c", "--rank", "2", "--shape", "1",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "index,rows,weight"
    assert len(lines) == 5


def test_enumerate_empty_shape(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--type", "c", "--rank", "2", "--shape", "0",
        "--format", "csv",
    )
    assert code == 0
    assert len(out.strip().split("\n")) == 2


def test_enumerate_two_box_column_count(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--type", "c", "--rank", "2", "--shape", "1,1",
    )
    assert code == 0
    blob = json.loads(out)
    assert blob["count"] == 5
    assert blob["type"] == "C" and blob["rank"] == 2


def test_enumerate_is_deterministic(capsys):
    args = ("enumerate", "--type", "d", "--rank", "3", "--shape", "2,1")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_enumerate_rank_cap(capsys):
    code, _, err = run(capsys, "enumerate", "--type", "c", "--rank", "99",
                       "--shape", "1")
    assert code == 3
    assert "max-rank" in err


def test_enumerate_vertex_cap(capsys):
    code, _, err = run(
        capsys, "enumerate", "--type", "c", "--rank", "3", "--shape", "2,1",
        "--max-vertices", "3",
    )
    assert code == 3


def test_enumerate_bad_shape(capsys):
    code, _, err = run(capsys, "enumerate", "--type", "c", "--rank", "2",
                       "--shape", "zz")
    assert code == 2
    assert "cannot parse shape" in err


# ---------------------------------------------------------------------------
# graph


def test_graph_diamond(capsys):
    code, out, _ = run(capsys, "graph", "--type", "d", "--rank", "2",
                       "--shape", "1")
    assert code == 0
    nodes = [l for l in out.splitlines() if "->" not in l and "label" in l]
    edges = [l for l in out.splitlines() if "->" in l]
    assert len(nodes) == 4
    assert len(edges) == 4
    assert '[label="0"]' in out and '[label="1"]' in out


def test_graph_empty_shape_single_node(capsys):
    code, out, _ = run(capsys, "graph", "--type", "b", "--rank", "2",
                       "--shape", "0")
    assert code == 0
    assert "->" not in out
    assert out.count("label") == 1


def test_graph_counts_match_library(capsys):
    code, out, _ = run(
        capsys, "graph", "--type", "c", "--rank", "3", "--shape", "2,1",
        "--format", "json",
    )
    assert code == 0
    blob = json.loads(out)
    graph = build_graph(t_lambda((2, 1), "c", 3))
    assert len(blob["vertices"]) == len(graph)
    assert len(blob["edges"]) == graph.arrow_count()


def test_graph_csv(capsys):
    code, out, _ = run(
        capsys, "graph", "--type", "b", "--rank", "2", "--shape", "1",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "source,arrow,target"
    assert len(lines) == 5


def test_graph_is_deterministic(capsys):
    args = ("graph", "--type", "d", "--rank", "3", "--shape", "1,1")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


# ---------------------------------------------------------------------------
# verify


def test_verify_unknown_identity(capsys):
    code, _, err = run(capsys, "verify", "no-such-suite")
    assert code == 2
    assert "unknown identity" in err


@pytest.mark.parametrize(
    "identity,flags",
    [
        ("e-expansion", ("--type", "c", "--a", "0..4", "--degree", "10")),
        ("residue-character", ("--a", "0..2", "--b", "0..2", "--c", "0..2")),
        ("psi", ("--type", "c", "--a", "0..2", "--b", "0..2")),
        ("psi-homomorphism", ("--type", "d", "--a", "0..1", "--b", "1..2")),
        ("tensor-decomp", ("--type", "d", "--a", "0..2", "--b", "1..2")),
        ("dominance-lemma", ("--type", "c",)),
        ("laurent-bridge", ("--type", "b", "--rank", "3")),
        ("jt-character", ("--type", "c", "--shape", "1:1", "--rank", "3")),
    ],
)
def test_verify_suites_pass(capsys, identity, flags):
    code, out, _ = run(capsys, "verify", identity, *flags)
    assert code == 0, out
    lines = out.strip().split("\n")
    assert all(l.startswith("PASS") for l in lines[:-1])
    assert ", 0 failed" in lines[-1]


def test_verify_reports_honest_failure(capsys):
    # the even orthogonal full-height family swaps with its signed twin at
    # odd ranks, so pinning the stable series to rank 3 must fail
    code, out, _ = run(
        capsys, "verify", "jt-character", "--type", "d", "--shape", "1,1",
        "--shape-ell", "1", "--rank", "3",
    )
    assert code == 1
    assert "FAIL" in out
    assert "1 failed" in out.strip().split("\n")[-1]


def test_verify_seed_is_logged(capsys):
    code, out, _ = run(capsys, "verify", "e-expansion", "--type", "c",
                       "--seed", "7")
    assert code == 0
    assert out.startswith("seed: 7\n")


def test_verify_caps(capsys):
    code, _, err = run(capsys, "verify", "e-expansion", "--degree", "99")
    assert code == 3
    code, _, err = run(capsys, "verify", "laurent-bridge", "--rank", "99")
    assert code == 3


def test_verify_output_file(capsys, tmp_path):
    path = tmp_path / "report.txt"
    code, out, _ = run(capsys, "verify", "e-expansion", "--type", "b",
                       "--output", str(path))
    assert code == 0
    assert out == ""
    text = path.read_text(encoding="utf-8")
    assert text.strip().endswith("0 failed")


# ---------------------------------------------------------------------------
# groth


def test_groth_delta_example(capsys):
    code, out, _ = run(capsys, "groth", "h:0 * z:1", "--type", "c",
                       "--side", "A")
    assert code == 0
    assert out == "z1*h0 + h1\n"


def test_groth_unit(capsys):
    code, out, _ = run(capsys, "groth", "1 * z:2", "--type", "c")
    assert code == 0
    assert out == "[1,1 | 0@0]\n"


def test_groth_zero_posi_fusion(capsys):
    code, out, _ = run(capsys, "groth", "w:3,1 * pi:3,3,2,1@4", "--type", "c")
    assert code == 0
    assert out == "[3,1 | 3,3,2,1@4]\n"


def test_groth_windowed_series(capsys):
    code, out, _ = run(capsys, "groth", "h:0 * h:0", "--type", "c",
                       "--degree", "8")
    assert code == 0
    assert out.strip().endswith("+ O(9)")
    assert "[0 | 2,2@2]" in out


def test_groth_json_round_trip(capsys):
    code, out, _ = run(capsys, "groth", "h:1 * z:1", "--type", "c",
                       "--side", "both", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["ring"]["through_degree"] is None
    assert {"zs": [1], "hs": [1], "barred": 0, "coeff": 1} in blob["algebra"]["terms"]


def test_groth_errors(capsys):
    assert run(capsys, "groth", "q:3", "--type", "c")[0] == 2
    assert run(capsys, "groth", "hbar:0", "--type", "c")[0] == 2
    assert run(capsys, "groth", "pi:1,1", "--type", "c")[0] == 2
    assert run(capsys, "groth", "h:0 * h:0", "--type", "c", "--side", "A")[0] == 2
    assert run(capsys, "groth", "h:0 * h:0", "--type", "c", "--degree", "99")[0] == 3


def test_groth_noncommutativity_visible(capsys):
    _, hz, _ = run(capsys, "groth", "h:1 * z:1", "--type", "c")
    _, zh, _ = run(capsys, "groth", "z:1 * h:1", "--type", "c")
    assert hz != zh
    assert zh == "[1 | 1@1]\n"
