"""End-to-end CLI behaviour: exit codes, formats, golden outputs."""

import io
from pathlib import Path

import pytest

from arclocal.cli import main
from arclocal.digraph import format_edge_list, parse_edge_list
from arclocal.generators import directed_cycle

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"
SAMPLE_CYCLE = str(DATA / "sample_cycle.txt")


def write_digraph(tmp_path, d, name="input.txt"):
    path = tmp_path / name
    path.write_text(format_edge_list(d))
    return str(path)


# ----------------------------------------------------------------------
# classify
# ----------------------------------------------------------------------


def test_classify_text(capsys, tmp_path):
    path = write_digraph(tmp_path, directed_cycle(5))
    assert main(["classify", path]) == 0
    out = capsys.readouterr().out
    assert "vertices: 5  arcs: 5" in out
    assert "arc_locally_in_semicomplete" in out
    assert "yes" in out


def test_classify_json_flags_pattern(capsys, tmp_path):
    # The forbidden orientation for the in class.
    from arclocal import Digraph

    path = write_digraph(tmp_path, Digraph(4, [(0, 1), (1, 2), (3, 2)]))
    assert main(["classify", path, "--format", "json"]) == 0
    out = capsys.readouterr().out
    assert '"arc_locally_in_semicomplete": false' in out
    assert '"in_in"' in out
    assert '"vertices": [0, 1, 2, 3]' in out


# ----------------------------------------------------------------------
# decompose
# ----------------------------------------------------------------------


def test_decompose_text_tripartition(capsys):
    assert main(["decompose", SAMPLE_CYCLE]) == 0
    out = capsys.readouterr().out
    assert "outcome: tripartition" in out
    assert "V2 parts: [[0, 1], [2], [3, 4, 5], [6, 7], [8]]" in out


def test_decompose_json_matches_golden(capsys):
    assert main(["decompose", SAMPLE_CYCLE, "--class", "als", "--format", "json"]) == 0
    assert capsys.readouterr().out == (GOLDEN / "sample_cycle_als.json").read_text()
    assert main(["decompose", SAMPLE_CYCLE, "--class", "in", "--format", "json"]) == 0
    assert capsys.readouterr().out == (GOLDEN / "sample_cycle_in.json").read_text()


def test_decompose_rejection_exit_code(capsys, tmp_path):
    from arclocal import Digraph

    path = write_digraph(tmp_path, Digraph(4, [(0, 1), (1, 2), (3, 2)]))
    assert main(["decompose", path]) == 1
    out = capsys.readouterr().out
    assert out == (
        "rejected: not arc-locally in-semicomplete: witness in_in 0 1 2 3\n"
    )


def test_decompose_rejection_json(capsys, tmp_path):
    from arclocal import Digraph

    path = write_digraph(tmp_path, Digraph(4, [(0, 1), (1, 2), (3, 2)]))
    assert main(["decompose", path, "--format", "json"]) == 1
    out = capsys.readouterr().out
    assert '"outcome": "rejected"' in out
    assert '"pattern": "in_in"' in out


def test_decompose_disconnected(capsys, tmp_path):
    from arclocal import Digraph

    path = write_digraph(tmp_path, Digraph(4, [(0, 1), (2, 3)]))
    assert main(["decompose", path]) == 1
    assert "rejected:" in capsys.readouterr().out


def test_decompose_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(format_edge_list(directed_cycle(5))))
    assert main(["decompose", "-"]) == 0
    assert "outcome: tripartition" in capsys.readouterr().out


def test_decompose_dot_groups(capsys):
    assert main(["decompose", SAMPLE_CYCLE, "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph D {\n")
    assert out.endswith("}\n")
    assert '  0 [fillcolor="#8dd3c7", xlabel="V2.0"];' in out
    assert "  0 -> 2;" in out


# ----------------------------------------------------------------------
# error handling
# ----------------------------------------------------------------------


def test_parse_error_is_usage_error(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("bogus\n")
    assert main(["classify", str(path)]) == 2
    err = capsys.readouterr().err
    assert err == "error: line 1: expected header 'n <count>', got 'bogus'\n"


def test_missing_file_is_usage_error(capsys):
    assert main(["classify", "/no/such/file.txt"]) == 2
    assert "error:" in capsys.readouterr().err


def test_bad_cap_env_is_usage_error(capsys, monkeypatch, tmp_path):
    path = write_digraph(tmp_path, directed_cycle(5))
    monkeypatch.setenv("ARCLOCAL_ORACLE_CAP", "many")
    assert main(["oracle", path]) == 2
    assert "ARCLOCAL_ORACLE_CAP" in capsys.readouterr().err


def test_cap_env_is_honoured(capsys, monkeypatch, tmp_path):
    path = write_digraph(tmp_path, directed_cycle(13))
    monkeypatch.setenv("ARCLOCAL_ORACLE_CAP", "4")
    assert main(["oracle", path, "--which", "perfect"]) == 2
    assert "exceeds cap 4" in capsys.readouterr().err
    monkeypatch.setenv("ARCLOCAL_ORACLE_CAP", "13")
    assert main(["oracle", path, "--which", "perfect"]) == 0


# ----------------------------------------------------------------------
# generate
# ----------------------------------------------------------------------


def test_generate_extended_cycle_matches_data_file(capsys):
    assert main(["generate", "extended-cycle", "--sizes", "2,1,3,2,1"]) == 0
    assert capsys.readouterr().out == Path(SAMPLE_CYCLE).read_text()


def test_generate_requires_arguments(capsys):
    assert main(["generate", "extended-cycle"]) == 2
    assert main(["generate", "random"]) == 2
    assert main(["generate", "from-index", "--n", "4"]) == 2
    assert main(["generate", "extended-cycle", "--sizes", "two,three"]) == 2


def test_generate_random_is_deterministic(capsys):
    assert main(["generate", "random", "--n", "8", "--seed", "3"]) == 0
    first = capsys.readouterr().out
    assert main(["generate", "random", "--n", "8", "--seed", "3"]) == 0
    assert capsys.readouterr().out == first


def test_generate_from_index_round_trip(capsys):
    from arclocal.generators import digraph_from_index

    assert main(["generate", "from-index", "--n", "4", "--index", "2034"]) == 0
    out = capsys.readouterr().out
    assert parse_edge_list(out) == digraph_from_index(4, 2034)


def test_generate_member_decomposes_cleanly(capsys, tmp_path):
    target = tmp_path / "member.txt"
    assert (
        main(
            [
                "generate", "member", "--n", "9", "--seed", "27",
                "--class", "in", "-o", str(target),
            ]
        )
        == 0
    )
    assert main(["decompose", str(target), "--class", "in"]) == 0
    assert "outcome:" in capsys.readouterr().out


def test_generate_dot_output(capsys):
    assert main(["generate", "extended-cycle", "--sizes", "1,1,1", "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out == 'digraph D {\n  node [style=filled, fillcolor=white];\n  0;\n  1;\n  2;\n  0 -> 1;\n  1 -> 2;\n  2 -> 0;\n}\n'


# ----------------------------------------------------------------------
# enumerate-verify
# ----------------------------------------------------------------------


def test_enumerate_verify_n3(capsys):
    assert main(["enumerate-verify", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("64 scanned, 54 members of class 'in', 0 failures")
    assert "  diperfect: 54\n" in out


def test_enumerate_verify_refuses_large_n(capsys):
    assert main(["enumerate-verify", "--n", "6"]) == 2
    assert "exceeds cap 5" in capsys.readouterr().err


# ----------------------------------------------------------------------
# oracle
# ----------------------------------------------------------------------


def test_oracle_outputs(capsys, tmp_path):
    c5 = write_digraph(tmp_path, directed_cycle(5))
    assert main(["oracle", c5, "--which", "perfect"]) == 0
    assert capsys.readouterr().out == "perfect: no (hole [0, 1, 2, 3, 4])\n"
    assert main(["oracle", c5, "--which", "odd-cycle"]) == 0
    assert capsys.readouterr().out == "induced directed odd cycle (>= 5): [0, 1, 2, 3, 4]\n"
    assert main(["oracle", c5, "--which", "nonoriented-odd-cycle"]) == 0
    assert capsys.readouterr().out == "induced non-oriented odd cycle (>= 5): none\n"
    c4 = write_digraph(tmp_path, directed_cycle(4), "c4.txt")
    assert main(["oracle", c4, "--which", "perfect"]) == 0
    assert capsys.readouterr().out == "perfect: yes\n"
    assert main(["oracle", c4, "--which", "clique-cut"]) == 0
    assert capsys.readouterr().out == "clique cut: none\n"
    path3 = write_digraph(tmp_path, parse_edge_list("n 3\n0 1\n1 2\n"), "p3.txt")
    assert main(["oracle", path3, "--which", "clique-cut"]) == 0
    assert capsys.readouterr().out == "clique cut: [1]\n"
