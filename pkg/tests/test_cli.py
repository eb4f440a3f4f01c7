import io
import json
import subprocess
import sys

import pytest

from singzeta.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_superpoly_trefoil():
    assert run("superpoly", "--newton", "(2,3)") == (0, "1 + q*t + a*q\n")


def test_semigroup_reports():
    code, text = run("semigroup", "--newton", "(2,3)(2,1)")
    assert code == 0 and "<4,6,13>" in text and "delta=8" in text
    code, text = run("semigroup", "--branch", "x=z^2;y=z^3", "--format", "json")
    assert json.loads(text)["branches"][0]["generators"] == [2, 3]


def test_check_reduction_bad():
    code, text = run("semigroup", "--branch", "x=z^4;y=z^6+z^7", "--check-reduction", "2")
    assert code == 0 and "BAD" in text


def test_lfunc_hopf_colored():
    code, text = run("lfunc", "--hopf", "2", "--colors", "2,1")
    assert code == 0
    from singzeta.polyalg import parse
    assert parse(text) == parse("(1 + a*q^2*t^2) + (q^2*t^2 - 1)*t")


def test_lfunc_single_field():
    code, text = run("lfunc", "--newton", "(2,3)", "--fields", "3")
    assert code == 0 and text == "1 + 3*t^2 + 3*a*t\n"


def test_witten_and_rho():
    code, text = run("witten", "--newton", "(2,3)(2,1)")
    assert code == 0 and text.startswith("mu(q,t) = 2 + q + q^2")
    code, text = run("rho", "--spec", "cab13.json", "--format", "json")
    assert code == 0 and json.loads(text)["rho_11"] == 25


def test_rh_single_verdict_csv():
    code, text = run("rh", "--newton", "(2,5)", "--q", "0.5", "--format", "csv")
    lines = text.strip().splitlines()
    assert code == 0 and lines[0].startswith("q,re,im") and len(lines) == 5
    assert all(line.endswith(",on") for line in lines[1:])


def test_input_errors_exit_3():
    assert run("superpoly", "--newton", "(2,3)", "--fields", "6")[0] == 3
    assert run("superpoly", "--branch", "x=z^4;y=z^6+z^7", "--fields", "2,3,4")[0] == 3
    assert run("superpoly")[0] == 3
    assert run("semigroup", "--newton", "(2,4)")[0] == 3
    assert run("superpoly", "--spec", "/nonexistent.json")[0] == 3
    assert run("nosuchcommand")[0] == 3


def test_guard_exit_2():
    assert run("superpoly", "--newton", "(2,3)(2,1)", "--ellmax", "1")[0] == 2


def test_verify_list():
    code, text = run("verify", "--list")
    assert code == 0 and len(text.strip().splitlines()) == 15


def test_output_is_deterministic():
    args = ("superpoly", "--newton", "(2,5)", "--format", "json")
    assert run(*args) == run(*args)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "singzeta", "superpoly", "--newton", "(2,3)"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout == "1 + q*t + a*q\n"
