import json

import pytest

from ef1lib import __version__
from ef1lib.cli.main import build_parser, main


def _write_fixture(tmp_path, name):
    out = tmp_path / name
    assert main(["catalog", name, "--out-dir", str(out)]) == 0
    return out


def _endpoints(out):
    return [
        "--instance",
        str(out / "instance.json"),
        "--from",
        str(out / "from.json"),
        "--to",
        str(out / "to.json"),
    ]


def test_cli_version(capsys):
    assert main(["version"]) == 0
    assert capsys.readouterr().out.strip() == __version__


def test_cli_requires_a_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_cli_catalog_listing(capsys):
    assert main(["catalog"]) == 0
    out = capsys.readouterr().out
    assert "gen2-disconnected: " in out
    assert "xt-three-heavy: " in out


def test_cli_catalog_emits_bundle(capsys):
    assert main(["catalog", "transfer2-disconnected"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["instance"]["agents"] == 2
    assert payload["from"] == {"bundles": [["g1", "g2"], ["g3", "g4"]]}
    assert payload["expect"]["reach"]["transfer"] == "not_found"


def test_cli_catalog_verify(capsys):
    exit_code = main(["catalog", "gen2-disconnected", "--verify"])
    out = capsys.readouterr().out
    assert exit_code == 0
    assert "ok   reach[exchange]: not_found as expected" in out
    assert out.strip().splitlines()[-1].startswith("all ")


def test_cli_catalog_verify_json(capsys):
    assert main(["catalog", "gen2-no-optimal", "--verify", "--output", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] is True
    assert {"check": "optimal[exchange]", "expected": "not_found"}.items() <= (
        payload["checks"][3].items()
    )


def test_cli_catalog_pads_agents(capsys):
    args = ["catalog", "binary3-disconnected", "--agents", "4", "--verify"]
    assert main([*args, "--output", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] is True
    assert payload["agents"] == 4

    assert main(["catalog", "iden3-disconnected", "--agents", "4"]) == 0
    bundle = json.loads(capsys.readouterr().out)
    assert bundle["instance"]["agents"] == 4
    assert bundle["from"]["bundles"][3] == ["g8"]


def test_cli_catalog_fixed_fixture_rejects_agents(capsys):
    assert main(["catalog", "gen2-disconnected", "--agents", "3"]) == 2
    assert "fixed at 2 agents" in capsys.readouterr().err


@pytest.mark.parametrize("method", ["bfs", "cycles"])
def test_cli_distance_methods_agree(tmp_path, capsys, method):
    out = _write_fixture(tmp_path, "gen2-no-optimal")
    capsys.readouterr()
    exit_code = main(["distance", *_endpoints(out), "--method", method])
    assert exit_code == 0
    assert capsys.readouterr().out.strip() == "2"


def test_cli_cycle_distance_needs_exchanges(tmp_path, capsys):
    out = _write_fixture(tmp_path, "transfer2-disconnected")
    args = ["distance", *_endpoints(out), "--method", "cycles", "--moves", "both"]
    assert main(args) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_reach_same_endpoints(tmp_path, capsys):
    out = _write_fixture(tmp_path, "gen2-no-optimal")
    capsys.readouterr()
    args = [
        "reach",
        "--instance",
        str(out / "instance.json"),
        "--from",
        str(out / "from.json"),
        "--to",
        str(out / "from.json"),
        "--output",
        "json",
    ]
    assert main(args) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] == "found"
    assert payload["length"] == 0
    assert payload["path"] == []


def test_cli_reach_then_check_path(tmp_path, capsys):
    out = _write_fixture(tmp_path, "gen2-no-optimal")
    capsys.readouterr()
    assert main(["reach", *_endpoints(out), "--output", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["length"] > 2
    path_file = tmp_path / "path.json"
    path_file.write_text(json.dumps(payload), encoding="utf-8")

    args = [
        "check",
        "--instance",
        str(out / "instance.json"),
        "--path",
        str(path_file),
        "--from",
        str(out / "from.json"),
    ]
    assert main(args) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == payload["length"] + 1
    assert all(line.endswith(": EF1") for line in lines)


def test_cli_reach_verdicts(tmp_path, capsys):
    out = _write_fixture(tmp_path, "gen2-disconnected")
    capsys.readouterr()
    assert main(["reach", *_endpoints(out)]) == 1
    assert capsys.readouterr().out.strip() == "not found"

    out = _write_fixture(tmp_path, "gen2-no-optimal")
    assert main(["reach", *_endpoints(out), "--optimal"]) == 1
    assert main(["reach", *_endpoints(out), "--budget", "1"]) == 3


def test_cli_check_allocation(tmp_path, capsys):
    out = _write_fixture(tmp_path, "iden3-disconnected")
    capsys.readouterr()
    args = [
        "check",
        "--instance",
        str(out / "instance.json"),
        "--alloc",
        str(out / "to.json"),
    ]
    assert main(args) == 0
    assert capsys.readouterr().out.strip() == "EF1"

    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps({"bundles": [["g1", "g2", "g3", "g4", "g5", "g6", "g7"], [], []]}),
        encoding="utf-8",
    )
    args[-1] = str(bad)
    assert main(args + ["--output", "json"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["ef1"] is False
    assert [2, 1] in payload["violations"]


def test_cli_connect(tmp_path, capsys):
    out = _write_fixture(tmp_path, "iden3-disconnected")
    capsys.readouterr()
    args = ["connect", "--instance", str(out / "instance.json"), "--sizes", "3,3,1"]
    assert main(args) == 1
    assert capsys.readouterr().out.startswith("disconnected: ")


def test_cli_poly_three_heavy(tmp_path, capsys):
    out = _write_fixture(tmp_path, "xt-three-heavy")
    capsys.readouterr()
    args = ["poly", *_endpoints(out), "--algo", "three-heavy", "--output", "json"]
    assert main(args) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["length"] == 4
    assert payload["path"][0]["kind"] == "transfer"
    assert payload["path"][0]["g"] == "a1"


def test_cli_itemgraph(tmp_path, capsys):
    out = _write_fixture(tmp_path, "gen2-no-optimal")
    capsys.readouterr()
    assert main(["itemgraph", *_endpoints(out), "--cycles"]) == 0
    dot = capsys.readouterr().out
    assert dot.startswith("digraph ItemGraph {")
    assert 'label="g1"' in dot


def test_cli_gen_partition(tmp_path, capsys):
    out = tmp_path / "partition"
    assert main(["gen", "partition", "--values", "1,1", "--out-dir", str(out)]) == 0
    capsys.readouterr()
    assert main(["distance", *_endpoints(out)]) == 0
    assert capsys.readouterr().out.strip() == "4"


def test_cli_gen_partition_odd_sum(capsys):
    assert main(["gen", "partition", "--values", "1,1,1"]) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_gen_pmr(capsys):
    args = ["gen", "pmr", "--side", "2", "--edges", "1-1,1-2,2-1,2-2"]
    assert main(args + ["--w0", "1,2", "--w", "2,1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["instance"]["agents"] == 3
    assert payload["to"]["bundles"][1] == ["p1", "q2"]


def test_cli_gen_graphdist(tmp_path, capsys):
    edges = tmp_path / "edges.txt"
    edges.write_text("0 1\n1 2\n2 0\n", encoding="utf-8")
    assert main(["gen", "graphdist", "--edges", str(edges)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["instance"]["goods"] == ["e1", "e2", "e3"]
    assert payload["from"]["bundles"] == [["e1"], ["e2"], ["e3"]]


def test_cli_gen_dtp(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 3 1\n1 -2 3 0\n", encoding="utf-8")
    args = ["gen", "dtp", "--cnf", str(cnf), "--output", "json"]
    assert main(args + ["--assignment", "FFF"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["p"] == 100
    assert payload["edges"] == 18 * 100 * 100 - 48
    assert payload["partition"]["ok"] is True

    assert main(args + ["--p", "5"]) == 2
    assert "error" in json.loads(capsys.readouterr().out)


def test_cli_missing_file(tmp_path, capsys):
    args = ["connect", "--instance", str(tmp_path / "missing.json")]
    assert main(args) == 2
    assert capsys.readouterr().err.startswith("error: ")
