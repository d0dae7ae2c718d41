"""Command line layer: both input formats, report serialization, subcommand
behavior and exit codes. End-to-end calls go through main(argv) in-process;
one subprocess check covers the python -m entry point."""

import json
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from zmx import Matrix, MatrixParseError
from zmx.cli import (
    emit_report,
    gather_info,
    main,
    parse_matrix,
    serialize_matrix,
)
from zmx.sampling import random_matrix


def mk(rows):
    return Matrix([[Fraction(x) for x in row] for row in rows])


A3 = mk([[1, -1, -1], [-2, 1, 1], [2, -2, -1]])
A3_TEXT = "3\n1 -1 -1\n-2 1 1\n2 -2 -1\n"
C3_TEXT = "3\n1 -1 -1\n-2 1 1\n2 2 -1\n"
P5_TEXT = (
    "5\n4 4 8 4 4\n1 2 4 2 2\n1 1 4 2 2\n2 2 4 4 4\n2 2 4 2 4\n"
)
W5_TEXT = (
    "5\n-2 -2 -2 -2 -2\n-1 -2 -2 -2 -2\n-1 -1 -2 -2 -2\n"
    "-1 -1 -1 -2 -2\n-1 -1 -1 -1 -2\n"
)


# ---------------------------------------------------------------- parsing


def test_parse_text_golden():
    assert parse_matrix(A3_TEXT) == A3
    assert parse_matrix("1\n5\n") == mk([[5]])
    assert parse_matrix("\n2\n\n1/2 1\n-3/2 5\n\n") == mk(
        [[Fraction(1, 2), 1], [Fraction(-3, 2), 5]]
    )


def parse_error(text):
    with pytest.raises(MatrixParseError) as err:
        parse_matrix(text)
    return err.value


def test_parse_text_errors_carry_positions():
    e = parse_error("2\n1/2 1\n1\n")
    assert e.line == 3
    e = parse_error("2\n1 2\n3 x\n")
    assert (e.line, e.column) == (3, 3)
    e = parse_error("x\n1\n")
    assert e.line == 1
    e = parse_error("0\n")
    assert e.line == 1
    e = parse_error("2 2\n1 2\n3 4\n")
    assert e.line == 1
    e = parse_error("3\n1 2 3\n")
    assert e.line is not None
    e = parse_error("1\n1\n2\n")
    assert e.line == 3
    parse_error("")
    parse_error("   \n \n")
    parse_error("1\n1/0\n")
    parse_error("1\n1.5\n")


def test_parse_json_golden():
    a = parse_matrix('{"n": 2, "entries": [["1", "-1"], ["-2", "3"]]}')
    assert a == mk([[1, -1], [-2, 3]])
    # bare integers are fine, as are rational strings
    a = parse_matrix('{"n": 2, "entries": [[1, "1/2"], [0, 3]]}')
    assert a == mk([[1, Fraction(1, 2)], [0, 3]])


def test_parse_json_errors():
    e = parse_error('{"n": 2, ')
    assert e.line is not None  # decoder position is passed through
    parse_error('{"n": 2}')
    parse_error('{"entries": []}')
    parse_error('{"n": "2", "entries": [["1"]]}')
    parse_error('{"n": true, "entries": [[1]]}')
    parse_error('{"n": 2, "entries": [["1", "2"]]}')
    parse_error('{"n": 1, "entries": [["1", "2"]]}')
    parse_error('{"n": 1, "entries": [[1.5]]}')
    parse_error('{"n": 1, "entries": [[true]]}')
    parse_error('{"n": 1, "entries": [["x"]]}')


def test_serialize_round_trips():
    assert serialize_matrix(mk([[Fraction(1, 2), 1], [Fraction(-3, 2), 5]])) == (
        "2\n1/2 1\n-3/2 5\n"
    )
    rng = random.Random(808)
    for _ in range(25):
        a = random_matrix(rng, rng.randint(1, 6))
        assert parse_matrix(serialize_matrix(a)) == a


# ---------------------------------------------------------------- reports


def test_json_report_is_compact_and_stable():
    report, info = gather_info(Matrix.identity(2))
    blob = emit_report(report, info, "json")
    assert blob == emit_report(report, info, "json")
    assert '"l_index":2' in blob
    assert '"is_nonsingular_m":true' in blob
    assert '"verdict":"Neither"' in blob
    assert '"d":"1"' in blob and '"c":"0"' in blob
    assert " " not in blob.split('"determinant"')[0]
    parsed = json.loads(blob)
    assert parsed["inverse"] == [["1", "0"], ["0", "1"]]


def test_json_report_verdicts():
    report, info = gather_info(parse_matrix(P5_TEXT))
    blob = emit_report(report, info, "json")
    assert '"verdict":"InverseM"' in blob
    assert '"inverse_is_bdsw":true' in blob
    assert '"is_inverse_cyclic":true' in blob

    report, info = gather_info(parse_matrix(W5_TEXT))
    blob = emit_report(report, info, "json")
    assert '"inverse_is_z":false' in blob
    assert '"verdict":"Neither"' in blob

    report, info = gather_info(Matrix.zeros(2))
    blob = emit_report(report, info, "json")
    assert '"inverse":null' in blob and '"is_nonsingular":false' in blob


def test_text_report_mentions_the_basics():
    report, info = gather_info(A3)
    out = emit_report(report, info, "text")
    assert "order: 3" in out
    assert "Z-matrix: no" in out
    assert "d = -1   c = -2   d - c = 1" in out
    assert "inverse (Z: yes, bdsw: yes):" in out


# ------------------------------------------------------------ subcommands


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_classify_command(tmp_path, capsys):
    path = write(tmp_path, "a3.txt", A3_TEXT)
    assert main(["classify", path]) == 0
    out = capsys.readouterr().out
    assert "verdict: Neither" in out
    assert main(["classify", "--json", path]) == 0
    out = capsys.readouterr().out
    assert out.startswith('{"n":3')


def test_cyclic_check_command(tmp_path, capsys):
    good = write(tmp_path, "a3.txt", A3_TEXT)
    assert main(["cyclic-check", good]) == 0
    out = capsys.readouterr().out
    assert "inverse cyclic: yes" in out
    assert "closed-form determinant: -1" in out

    bad = write(tmp_path, "c3.txt", C3_TEXT)
    assert main(["cyclic-check", bad]) == 1
    out = capsys.readouterr().out
    assert "inverse cyclic: no" in out


def test_invert_methods_agree(tmp_path, capsys):
    path = write(tmp_path, "a3.txt", A3_TEXT)
    outputs = []
    for method in ("oracle", "cyclic", "maybee"):
        assert main(["invert", "--method", method, path]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1] == outputs[2]
    assert parse_matrix(outputs[0]) == mk([[-1, -1, 0], [0, -1, -1], [-2, 0, 1]])


def test_invert_failures(tmp_path, capsys):
    singular = write(tmp_path, "s.txt", "2\n1 1\n1 1\n")
    assert main(["invert", singular]) == 1
    assert "error:" in capsys.readouterr().err

    not_cyclic = write(tmp_path, "c3.txt", C3_TEXT)
    assert main(["invert", "--method", "cyclic", not_cyclic]) == 1
    assert "error:" in capsys.readouterr().err


def test_parse_and_io_failures_exit_2(tmp_path, capsys):
    bad = write(tmp_path, "bad.txt", "2\n1 2\n3 x\n")
    assert main(["classify", bad]) == 2
    err = capsys.readouterr().err
    assert "parse error" in err and "line 3" in err
    assert main(["classify", str(tmp_path / "missing.txt")]) == 2
    assert "error:" in capsys.readouterr().err


def test_digraph_command(tmp_path, capsys):
    path = write(tmp_path, "b.txt", "3\n-1 -1 0\n0 -1 -1\n-2 0 1\n")
    assert main(["digraph", path]) == 0
    out = capsys.readouterr().out
    assert "irreducible: yes" in out
    assert "unipathic: yes" in out
    assert "1->1" in out and "3->1" in out

    assert main(["digraph", "--dot", path]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph {")
    assert "  v1 -> v2;" in out


def test_gen_commands(tmp_path, capsys):
    assert main(["gen", "typed", "--params", "1,2,3,4"]) == 0
    out = capsys.readouterr().out
    assert parse_matrix(out) == mk([[1, 1, 1, 1], [1, 2, 2, 2], [1, 2, 3, 3], [1, 2, 3, 4]])

    assert main(["gen", "bdsw", "--diag=-1,-1,1", "--super=-1,-1", "--corner=-2"]) == 0
    assert parse_matrix(capsys.readouterr().out) == mk(
        [[-1, -1, 0], [0, -1, -1], [-2, 0, 1]]
    )

    assert main(["gen", "cyclic", "--diag=2,1,-2,1", "--super=-2,2,0", "--corner=2"]) == 0
    assert parse_matrix(capsys.readouterr().out) == mk(
        [[2, -2, -4, 0], [0, 1, 2, 0], [0, 0, -2, 0], [2, -2, -4, 1]]
    )

    assert main(["gen", "circulant", "--alpha=-1,-2,-4"]) == 0
    assert parse_matrix(capsys.readouterr().out) == mk(
        [[-1, -2, -4], [-4, -1, -2], [-2, -4, -1]]
    )

    # generator output feeds straight back into classify
    blob = None
    assert main(["gen", "circulant", "--alpha=-1,-2,-4"]) == 0
    blob = capsys.readouterr().out
    path = write(tmp_path, "gen.txt", blob)
    assert main(["classify", "--json", path]) == 0
    assert '"verdict":"InverseN"' in capsys.readouterr().out


def test_gen_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "typed"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["gen", "bdsw", "--diag=1,2"])
    assert exc.value.code == 2
    # bad rational literal inside a parameter list is caught, not a crash
    assert main(["gen", "typed", "--params", "1,x,3"]) == 2


def test_verify_command(capsys):
    assert main(["verify", "--theorem", "det-formula", "--n", "2..3",
                 "--trials", "5", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert "theorem: det-formula" in out
    assert "failures: 0" in out

    with pytest.raises(SystemExit) as exc:
        main(["verify", "--theorem", "no-such-thing"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--theorem", "det-formula", "--n", "5..2"])
    assert exc.value.code == 2


def test_perron_command(tmp_path, capsys):
    path = write(tmp_path, "ones.txt", "3\n1 1 1\n1 1 1\n1 1 1\n")
    assert main(["perron", "--r", "3", path]) == 0
    out = capsys.readouterr().out
    assert "r: 3" in out
    assert "bound: 3" in out.splitlines()[1]
    assert "bracket: (" in out
    assert "decimal: 3" in out
    # r beyond the order is a usage problem
    assert main(["perron", "--r", "4", path]) == 2
    assert "error:" in capsys.readouterr().err


def test_order_cap_env(tmp_path, capsys, monkeypatch):
    z3 = write(tmp_path, "z.txt", "3\n1 -1 0\n0 1 -1\n0 0 1\n")
    monkeypatch.setenv("ZMX_ORDER_CAP", "2")
    assert main(["classify", z3]) == 1
    assert "cap" in capsys.readouterr().err

    monkeypatch.setenv("ZMX_ORDER_CAP", "junk")
    assert main(["classify", z3]) == 2
    capsys.readouterr()

    monkeypatch.setenv("ZMX_ORDER_CAP", "0")
    assert main(["classify", z3]) == 2
    capsys.readouterr()

    monkeypatch.setenv("ZMX_ORDER_CAP", "12")
    assert main(["classify", z3]) == 0
    capsys.readouterr()


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "zmx", "classify", "-"],
        input=A3_TEXT,
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert "verdict: Neither" in proc.stdout
