import io
import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lieforge import scfile
from lieforge.cli import EXIT_CONFIG, EXIT_FAIL, EXIT_OK, ConfigError, RunConfig, build_algebra, main, run
from lieforge.constructions import build_glpluseps_direct, build_Iu_direct
from lieforge.core import specialize, truncate

IU2_GOLDEN = """\
lieforge-sc v1
algebra=Iu n=2 ring=Q
basis = a[1] a[2] x[1,2] b[1] b[2] x[2,1]
[a[1],x[1,2]] = x[1,2]
[a[1],x[2,1]] = -x[2,1]
[a[2],x[1,2]] = -x[1,2]
[a[2],x[2,1]] = x[2,1]
[x[1,2],x[2,1]] = 1/2*b[1] - 1/2*b[2]
"""


def invoke(cfg):
    buf = io.StringIO()
    return run(cfg.validate(), buf), buf.getvalue()


# -- emit ---------------------------------------------------------------------

def test_emit_iu2_golden():
    code, text = invoke(RunConfig("emit", "Iu", 2))
    assert code == EXIT_OK
    assert text == IU2_GOLDEN


def test_emit_glplus2_line():
    _, text = invoke(RunConfig("emit", "glplus", 2))
    assert "[x[1,2],x[2,1]] = 1/2*b[1] - 1/2*b[2] + 1/2*eps*a[1] - 1/2*eps*a[2]\n" in text
    assert "ring=Q[eps]\n" in text


def test_emit_un1_is_header_only():
    _, text = invoke(RunConfig("emit", "un", 1))
    assert text.splitlines() == ["lieforge-sc v1", "algebra=un n=1 ring=Q", "basis = a[1]"]


def test_emit_truncated_and_specialized_rings():
    _, text = invoke(RunConfig("emit", "glplus", 2, truncate=1))
    assert "ring=Q[eps]/eps^2" in text
    _, text = invoke(RunConfig("emit", "glplus", 2, eps=Fraction(1, 3)))
    assert "ring=Q\n" in text and "1/6*a[1]" in text


def test_emit_out_file(tmp_path):
    path = tmp_path / "iu2.sc"
    code, text = invoke(RunConfig("emit", "Iu", 2, out=str(path)))
    assert code == EXIT_OK and text == ""
    assert path.read_bytes() == IU2_GOLDEN.encode()


def test_emit_unwritable(tmp_path):
    bad = tmp_path / "missing-dir" / "x.sc"
    assert main(["emit", "--out", str(bad)]) == EXIT_CONFIG


def test_emit_deterministic_across_processes(tmp_path):
    outs = []
    for k in range(2):
        p = tmp_path / f"g{k}.sc"
        subprocess.run([sys.executable, "-m", "lieforge", "emit", "--algebra", "glplus", "--n", "4",
                        "--out", str(p)], check=True, env={**os.environ, "PYTHONHASHSEED": str(k)})
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]


# -- round trip -----------------------------------------------------------------

@pytest.mark.parametrize("L", [
    build_Iu_direct(3),
    build_glpluseps_direct(3),
    truncate(build_glpluseps_direct(3), 1),
    specialize(build_glpluseps_direct(2), Fraction(-2, 5)),
], ids=["Iu3", "glplus3", "glplus3-k1", "glplus2-eps"])
def test_round_trip(L):
    back = scfile.parse(scfile.emit(L))
    assert back == L
    assert scfile.emit(back) == scfile.emit(L)


@given(st.sampled_from(["Iu", "glplus", "un", "gln", "sl-Iu", "sl-glplus"]), st.integers(1, 4))
@settings(max_examples=25, deadline=None)
def test_round_trip_all_kinds(kind, n):
    L = build_algebra(RunConfig("emit", kind, n).validate())
    assert scfile.parse(scfile.emit(L)).same_table(L)


def test_parse_errors():
    with pytest.raises(scfile.SCFormatError):
        scfile.parse("not a header\n")
    with pytest.raises(scfile.SCFormatError, match="ring"):
        scfile.parse("lieforge-sc v1\nalgebra=x n=1 ring=R\nbasis = a[1]\n")
    with pytest.raises(scfile.SCFormatError, match="outside"):
        scfile.parse(IU2_GOLDEN + "[a[1],b[1]] = x[3,1]\n")


# -- table / enumerate / diamond ----------------------------------------------

def test_table_n3():
    code, text = invoke(RunConfig("table", "Iu", 3))
    assert code == EXIT_OK
    assert text.splitlines() == [
        "layer 0: a[1] a[2] a[3]",
        "layer 1: x[1,2] x[2,3] x[3,1]*",
        "layer 2: x[1,3] x[2,1]* x[3,2]*",
        "layer 3: b[1]* b[2]* b[3]*",
    ]


def test_enumerate_iu3():
    code, text = invoke(RunConfig("enumerate", "Iu", 3))
    assert code == EXIT_OK
    assert text.splitlines() == [
        "autos: 123, 231, 312",
        "autos: 3 found",
        "antis: 132, 213, 321",
        "antis: 3 found",
        "group order: 6, closed: yes",
    ]


def test_enumerate_iu2():
    _, text = invoke(RunConfig("enumerate", "Iu", 2))
    assert "group order: 4, closed: yes" in text
    assert "autos: 2 found" in text and "antis: 2 found" in text


def test_enumerate_glplus_eps1():
    _, text = invoke(RunConfig("enumerate", "glplus", 3, eps=Fraction(1)))
    assert "autos: 6 found" in text.splitlines()


def test_diamond_command():
    code, text = invoke(RunConfig("diamond"))
    assert code == EXIT_OK
    lines = text.splitlines()
    assert lines[2:] == [
        "basis = a x y b",
        "[a,x] = x",
        "[a,y] = -y",
        "[x,y] = b",
        "Phi: a -> -a, x -> x, y -> y, b -> -b",
        "Psi: a -> -a, x -> y, y -> x, b -> -b",
    ]


# -- verify -------------------------------------------------------------------

def test_verify_truncated_solvable():
    code, text = invoke(RunConfig("verify", "glplus", 3, truncate=2))
    assert "solvable: PASS" in text.splitlines()
    assert code == EXIT_OK and text.endswith("summary: PASS\n")


def test_verify_glplus_symbolic():
    code, text = invoke(RunConfig("verify", "glplus", 3))
    assert code == EXIT_OK, text
    for name in ("oracle-double", "form-invariance", "specialize-0-is-Iu", "eps1-center",
                 "eps1-split-onto-gln", "not-solvable-at-eps1"):
        assert f"{name}: PASS" in text


@pytest.mark.parametrize("algebra", ["sl-Iu", "sl-glplus", "un", "gln"])
def test_verify_other_kinds(algebra):
    code, text = invoke(RunConfig("verify", algebra, 3))
    assert code == EXIT_OK, text


def test_verify_iu_reports_layer_gap():
    # every line but the layer-series comparison passes; the exit code
    # reflects the failing check
    code, text = invoke(RunConfig("verify", "Iu", 4))
    fails = [l for l in text.splitlines() if ": FAIL" in l and not l.startswith("summary")]
    assert [l.split(":")[0] for l in fails] == ["layer-table-a", "layer-table-d"]
    assert "oracle-coadjoint: PASS" in text and "psi-automorphism: PASS" in text
    assert code == EXIT_FAIL


def test_verify_lines_are_deterministic():
    assert invoke(RunConfig("verify", "glplus", 2))[1] == invoke(RunConfig("verify", "glplus", 2))[1]


# -- configuration errors -----------------------------------------------------

@pytest.mark.parametrize("argv", [
    ["emit", "--algebra", "Iu", "--eps", "1"],
    ["emit", "--algebra", "glplus", "--eps", "1", "--truncate", "2"],
    ["emit", "--algebra", "glplus", "--truncate", "-1"],
    ["emit", "--eps", "1/0", "--algebra", "glplus"],
    ["emit", "--format", "json"],
    ["emit", "--n", "0"],
    ["table", "--algebra", "glplus"],
    ["enumerate", "--n", "9"],
    ["enumerate", "--algebra", "gln"],
])
def test_config_errors_exit_2(argv, capsys):
    assert main(argv) == EXIT_CONFIG
    assert "error" in capsys.readouterr().err


def test_argparse_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == EXIT_CONFIG


def test_max_enum_override():
    assert main(["enumerate", "--n", "2", "--max-enum", "2"]) == EXIT_OK


def test_config_error_type():
    with pytest.raises(ConfigError):
        RunConfig("verify", "Iu", 3, truncate=1).validate()
