import json

import pytest

from irredundance.cli import main, parse_family_spec
from irredundance.graphs import complete_bipartite, join, path, to_graph6


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_path_skew_json(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--family", "path:7", "--param", "skew", "--output", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert (data["xir"], data["x"], data["x_upper"], data["xir_upper"]) == (1, 1, 1, 1)


def test_forts_star(capsys):
    code, out, _ = run_cli(
        capsys, "forts", "--family", "star:1,3", "--param", "standard"
    )
    assert code == 0
    data = json.loads(out)
    assert data["members"] == [[1, 2], [1, 3], [2, 3], [1, 2, 3], [0, 1, 2, 3]]


def test_forts_provenances(capsys):
    for prov in ("connected-psd", "closure-derived", "generators", "minimal"):
        code, out, _ = run_cli(
            capsys, "forts", "--family", "path:4", "--param", "psd",
            "--provenance", prov,
        )
        assert code == 0
        assert json.loads(out)["n"] == 4


def test_verify_suite_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "chain", "--max-n", "4")
    assert code == 0
    assert "PASS" in out
    # the vcir equality fails at order 6 (triangular prism); exit code 1
    code, out, _ = run_cli(capsys, "verify", "--suite", "vcir-eq-tau", "--max-n", "6")
    assert code == 1
    assert "ELv_" in out


def test_verify_unknown_suite_is_usage_error(capsys):
    code, _, _ = run_cli(capsys, "verify", "--suite", "nope")
    assert code == 2


def test_tar_dot_deterministic(capsys):
    args = ("tar", "--family", "star:1,3", "--param", "standard", "--kind", "xir-sets")
    code, out1, _ = run_cli(capsys, *args)
    assert code == 0 and out1.startswith("graph tar {")
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
    code, out, _ = run_cli(capsys, *args, "--output", "json")
    assert json.loads(out)["kind"] == "xir_sets"


def test_chain_command_paw(capsys):
    code, out, _ = run_cli(capsys, "chain", "--fixture", "paw", "--output", "json")
    assert code == 0
    data = json.loads(out)
    assert (data["dir"], data["gamma"], data["DIR"], data["VCIR"]) == (1, 1, 2, 3)


def test_fixture_sources(capsys):
    for name in ("fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "bull", "paw", "bc"):
        code, out, _ = run_cli(
            capsys, "compute", "--fixture", name, "--param", "vc", "--output", "json"
        )
        assert code == 0, name
    code, _, err = run_cli(capsys, "compute", "--fixture", "fig99", "--param", "vc")
    assert code == 2 and "unknown fixture" in err


def test_g6_source(capsys):
    g6 = to_graph6(path(5))
    code, out, _ = run_cli(
        capsys, "compute", "--g6", g6, "--param", "standard", "--output", "json"
    )
    assert code == 0
    assert json.loads(out)["graph_g6"] == g6


def test_stdin_source(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(to_graph6(path(4)) + "\n"))
    code, out, _ = run_cli(
        capsys, "compute", "--stdin", "--param", "vc", "--output", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert (data["xir"], data["x"]) == (2, 2)


def test_exactly_one_source_required(capsys):
    code, _, err = run_cli(capsys, "compute", "--param", "standard")
    assert code == 2
    code, _, err = run_cli(
        capsys, "compute", "--g6", "Ch", "--family", "path:4", "--param", "standard"
    )
    assert code == 2


def test_family_grammar():
    assert parse_family_spec("cbip:2,3") == complete_bipartite(2, 3)
    assert parse_family_spec("join(cycle:4,complete:2)") == join(
        parse_family_spec("cycle:4"), parse_family_spec("complete:2")
    )
    # a bare integer continues the previous atom inside nested argument lists
    g = parse_family_spec("join(cbip:2,3,path:2)")
    assert g.n == 7
    d = parse_family_spec("du(complete:2,complete:2)")
    assert d.edges() == [(0, 1), (2, 3)]
    nested = parse_family_spec("du(join(empty:1,empty:2),path:3)")
    assert nested.n == 6
    assert parse_family_spec("cmulti:1,1,3").n == 5
    for bad in ("triangle:3", "path", "path:x", "join(path:3)", "join(path:3", ""):
        with pytest.raises(ValueError):
            parse_family_spec(bad)


def test_family_source_errors(capsys):
    code, _, err = run_cli(
        capsys, "compute", "--family", "cycle:2", "--param", "standard"
    )
    assert code == 2 and "cycle" in err


def test_json_output_is_byte_deterministic(capsys):
    args = ("compute", "--family", "cbip:2,3", "--param", "psd", "--output", "json")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
    args = ("forts", "--fixture", "fig7", "--param", "skew")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_budget_override(capsys):
    code, _, err = run_cli(
        capsys, "compute", "--family", "path:7", "--param", "standard",
        "--budget-n", "6",
    )
    assert code == 2  # guard rejects the 2^7 scan
    code, _, _ = run_cli(
        capsys, "compute", "--family", "path:7", "--param", "standard",
        "--budget-n", "7",
    )
    assert code == 0
