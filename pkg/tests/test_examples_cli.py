"""The example registry and the command-line driver."""

import io
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from stagedsl import highexpr as hi, lowexpr as lo
from stagedsl.cli import cli
from stagedsl.examples import EXAMPLES

GOLDEN = Path(__file__).parent / "golden"


def test_registry_names_and_languages():
    assert set(EXAMPLES) == {"sumInput", "powerInput"}
    assert EXAMPLES["sumInput"].lang is lo.LANG
    assert EXAMPLES["powerInput"].lang is hi.LANG


def test_list_prints_sorted_names(capsys):
    assert cli(["list"]) == 0
    assert capsys.readouterr().out == "powerInput\nsumInput\n"


def test_run_wires_process_stdio(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("1\n2\n3\n4\n"))
    assert cli(["run", "sumInput"]) == 0
    assert capsys.readouterr().out == (GOLDEN / "sum_run.txt").read_text()


def test_run_reports_bad_input_on_stderr(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("1\nnope\n"))
    assert cli(["run", "sumInput"]) == 1
    assert "error:" in capsys.readouterr().err


def test_compile_defaults_to_pseudo_code(capsys):
    assert cli(["compile", "powerInput"]) == 0
    assert capsys.readouterr().out == (GOLDEN / "power_pseudo.txt").read_text()


def test_compile_already_low_examples_directly(capsys):
    assert cli(["compile", "sumInput"]) == 0
    assert capsys.readouterr().out == (GOLDEN / "sum_pseudo.txt").read_text()


def test_compile_c_backend(capsys):
    assert cli(["compile", "powerInput", "--backend", "c"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("#include <stdint.h>")
    assert "int main(void)" in out


def test_compile_accepts_strategy_flags(capsys):
    assert cli(["compile", "powerInput", "--let", "by-name", "--unroll", "even2"]) == 0
    # powerInput has no let and no doubled count, so the flags cannot show
    assert capsys.readouterr().out == (GOLDEN / "power_pseudo.txt").read_text()


def test_compile_is_deterministic_across_invocations(capsys):
    cli(["compile", "powerInput"])
    first = capsys.readouterr().out
    cli(["compile", "powerInput"])
    assert capsys.readouterr().out == first


def test_unknown_example_fails_with_a_diagnostic(capsys):
    assert cli(["run", "fibonacci"]) != 0
    assert "fibonacci" in capsys.readouterr().err
    assert cli(["compile", "fibonacci"]) != 0
    assert "fibonacci" in capsys.readouterr().err


def test_unknown_flags_and_subcommands_fail(capsys):
    assert cli(["compile", "powerInput", "--optimize"]) != 0
    assert capsys.readouterr().err != ""
    assert cli(["frobnicate"]) != 0
    assert capsys.readouterr().err != ""
    assert cli([]) != 0


def test_bad_backend_value_fails(capsys):
    assert cli(["compile", "powerInput", "--backend", "llvm"]) != 0
    assert "--backend" in capsys.readouterr().err


@pytest.mark.skipif(shutil.which("stagedsl") is None, reason="entry point not on PATH")
def test_installed_entry_point_runs():
    proc = subprocess.run(
        ["stagedsl", "list"], capture_output=True, text=True, timeout=30
    )
    assert proc.returncode == 0
    assert proc.stdout == "powerInput\nsumInput\n"
