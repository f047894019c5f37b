import io
import subprocess
import sys

import pytest

from tildes.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_sat():
    assert call("sat", "!(1 & 2) & (1 & 3)") == (0, "true\n", "")
    assert call("sat", "1 & !1")[:2] == (1, "false\n")


def test_parse_pretty_prints():
    code, out, _ = call("parse", "T[mirror(1)](a.a*, b)")
    assert code == 0
    assert out == "T[1 & 2 | !1 & !2](a+, b)\n"


def test_null():
    assert call("null", "T[1<->3](a, T[1->2](b,c), d)")[1] == "true\n"
    assert call("null", "ab")[1] == "false\n"


def test_member():
    assert call("member", "T[mirror(2)](a+, b+, a+, b+)", "abab")[:2] == (0, "true\n")
    assert call("member", "T[mirror(2)](a+, b+, a+, b+)", "aba")[:2] == (1, "false\n")


def test_derive():
    code, out, _ = call("derive", "T[mirror(2)](a+, b+, a+, b+)", "ab")
    assert code == 0
    assert out.splitlines() == ["b*T[!2 & !1](a+, b+)", "b*"]


def test_enum():
    _, out, _ = call("enum", "T[mirror(2)](a, b, a, b)", "--bound", "4")
    assert out.splitlines() == ['""', "ab", "ba", "abab"]


def test_dta_summary():
    code, out, _ = call("dta", "T[mirror(2)](a+, b+, a+, b+)")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "states=7 finals=3 transitions=13"
    assert lines[1].startswith("q0 initial final ")


def test_glushkov_summary_and_dot():
    _, out, _ = call("glushkov", "T[1<->3](a, T[1->2](b,c), d)")
    assert out.splitlines()[0] == "states=11 finals=5 transitions=12"
    _, dot, _ = call("glushkov", "(a+b)*a(a+b)", "--dot")
    assert dot.startswith("digraph automaton {")
    assert dot.count("doublecircle") == 2


def test_equiv():
    assert call("equiv", "(a+b)*", "(a*b*)*")[:2] == (0, "true\n")
    assert call("equiv", "a*", "1 + a")[:2] == (1, "false\n")


def test_bench():
    _, out, _ = call("bench", "mirror", "2")
    assert "fooling_bound=4" in out.splitlines()


def test_parse_error_shows_caret():
    code, out, err = call("parse", "a + ()")
    assert code == 2
    assert out == ""
    lines = err.splitlines()
    assert lines[0] == "error: empty group at position 5"
    assert lines[2].index("^") == 2 + 5


def test_atom_out_of_range_exit_code():
    code, _, err = call("parse", "T[3](a, b)")
    assert code == 2
    assert err.startswith("error:")


def test_usage_error(capsys):
    assert call("enum", "a")[0] == 2
    assert call()[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tildes", "sat", "1 | !1"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == "true\n"
