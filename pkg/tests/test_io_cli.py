from __future__ import annotations

import io
import json

import pytest

from corpus import NAMED, P4
from matchstruct import cli
from matchstruct.dmposet import TfrInvariantError
from matchstruct.io import format_edge_list, graph_from_json, graph_to_json, parse_edge_list

P4_TEXT = "4 3\n0 1\n1 2\n2 3\n"
TRI_TEXT = "3 3\n0 1\n1 2\n2 0\n"
STAR3_TEXT = "4 3\n0 1\n0 2\n0 3\n"
MTX = "%%MatrixMarket matrix coordinate pattern general\n3 2 3\n1 1\n2 2\n3 2\n"


def run(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", sorted(NAMED))
def test_edge_list_and_json_round_trip(name):
    g = NAMED[name]
    assert parse_edge_list(format_edge_list(g)) == g
    assert graph_from_json(json.dumps(graph_to_json(g))) == g


def test_decompose_json_counts(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["decompose"], P4_TEXT)
    dm = json.loads(out)["dm"]
    assert code == 0
    assert len(dm["elements"]) == 4 and len(dm["order"]) == 2 and len(dm["forbidden"]) == 3


def test_decompose_dot_single_node(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["decompose", "--emit", "dot"], TRI_TEXT)
    assert code == 0
    assert out.count("[label=") == 1 and "->" not in out and " -- " not in out


def test_decompose_text(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["decompose", "--emit", "text"], P4_TEXT)
    assert code == 0 and out.strip()


def test_malformed_input_exits_2(monkeypatch, capsys, tmp_path):
    code, _, err = run(monkeypatch, capsys, ["decompose"], "3 1\n0 0\n")
    assert code == cli.EXIT_INPUT and "error" in err
    code, _, _ = run(monkeypatch, capsys, ["decompose", "--input", str(tmp_path / "missing")])
    assert code == cli.EXIT_INPUT
    code, _, _ = run(monkeypatch, capsys, ["btf"], "garbage")
    assert code == cli.EXIT_INPUT
    code, _, _ = run(monkeypatch, capsys, ["btf"], "%%MatrixMarket matrix coordinate pattern general\n2 2 0\n")
    assert code == cli.EXIT_INPUT


def test_invariant_violation_exits_3(monkeypatch, capsys):
    def broken(b):
        raise TfrInvariantError("forced")

    monkeypatch.setattr(cli, "from_decomposition", broken)
    code, _, err = run(monkeypatch, capsys, ["decompose"], P4_TEXT)
    assert code == cli.EXIT_INVARIANT and "forced" in err


def test_barriers_output(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["barriers"], P4_TEXT)
    data = json.loads(out)
    assert code == 0
    assert [b["vertices"] for b in data["maximalBarriers"]] == [[0, 2], [1, 2], [1, 3]]
    assert data["intersection"] == [] and data["truncated"] is False
    _, out, _ = run(monkeypatch, capsys, ["barriers"], STAR3_TEXT)
    data = json.loads(out)
    assert [b["vertices"] for b in data["maximalBarriers"]] == [[0]] and data["intersection"] == [0]
    _, out, _ = run(monkeypatch, capsys, ["barriers"], TRI_TEXT)
    assert [b["vertices"] for b in json.loads(out)["maximalBarriers"]] == [[]]


def test_barrier_cap_exits_4_with_partial_output(monkeypatch, capsys):
    code, out, err = run(monkeypatch, capsys, ["barriers", "--max-barriers", "2"], P4_TEXT)
    data = json.loads(out)
    assert code == cli.EXIT_CAP and "warning" in err
    assert len(data["maximalBarriers"]) == 2 and data["truncated"] is True


def test_btf_from_stdin(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["btf"], MTX)
    data = json.loads(out)
    assert code == 0
    assert data["coarse"]["vertical"] == {"rows": [1, 2], "cols": [1]}
    assert data["rowPerm"] == [0, 1, 2]


def test_matrix_market_graph_for_decompose(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["decompose", "--format", "matrixmarket"], MTX)
    assert code == 0 and json.loads(out)["graph"]["n"] == 5


def test_random_graph_and_output_file(monkeypatch, capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(monkeypatch, capsys, ["decompose", "--random", "20,30", "--seed", "3", "--output", str(target)])
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["graph"]["n"] == 20


def test_output_is_repeatable(monkeypatch, capsys):
    outs = {run(monkeypatch, capsys, ["decompose", "--emit", "dot"], P4_TEXT)[1] for _ in range(3)}
    assert len(outs) == 1


def test_bad_flags_exit_via_argparse():
    with pytest.raises(SystemExit) as info:
        cli.main(["barriers", "--max-barriers", "0"])
    assert info.value.code == 2
