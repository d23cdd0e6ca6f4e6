"""The interpreter: console behaviour, input parsing, evaluation discipline."""

import dataclasses
import io

import pytest

from stagedsl import highexpr as hi, lowexpr as lo
from stagedsl.core import (
    DslError,
    Language,
    StageError,
    SymbolicRef,
    TypeTag,
    GetRef,
    Instr,
    for_loop,
    print_str,
    read_input,
    ret,
    seq,
    write_output,
)
from stagedsl.examples import power_input, sum_input
from stagedsl.runtime import InputError, run, run_text


def test_sum_example_full_transcript():
    _, out, reads = run_text(sum_input(), lo.LANG, "1\n2\n3\n4\n")
    assert out == "Please enter 4 numbers\n >  >  >  > The sum of your numbers is 10.\n"
    assert reads == 4


@pytest.mark.parametrize(
    "m,n,result", [(3, 4, 81), (2, 10, 1024), (5, 0, 1), (-2, 3, -8), (0, 3, 0)]
)
def test_power_example_computes_m_to_the_n(m, n, result):
    _, out, reads = run_text(power_input(), hi.LANG, f"{m}\n{n}\n")
    assert out.endswith(f"{m}^{n} = {result}.\n")
    assert reads == 2


def test_read_parses_optionally_signed_decimals():
    prog = read_input(lo.LANG).bind(write_output)
    assert run_text(prog, lo.LANG, "-3\n")[1] == "-3"
    assert run_text(prog, lo.LANG, "+7\n")[1] == "7"
    assert run_text(prog, lo.LANG, "  42  \n")[1] == "42"


def test_read_wraps_oversized_decimals_into_32_bits():
    prog = read_input(lo.LANG).bind(write_output)
    assert run_text(prog, lo.LANG, "4294967294\n")[1] == "-2"


def test_read_rejects_garbage_naming_the_text():
    prog = read_input(lo.LANG)
    with pytest.raises(InputError, match="3x"):
        run_text(prog, lo.LANG, "3x\n")
    with pytest.raises(InputError):
        run_text(prog, lo.LANG, "\n")
    with pytest.raises(InputError, match="exhausted"):
        run_text(prog, lo.LANG, "")


def test_reads_are_counted_per_execution_not_per_instruction():
    prog = for_loop(lo.LANG, lo.lit(3), lambda _i: read_input(lo.LANG).bind(write_output))
    result, out, reads = run_text(prog, lo.LANG, "5\n6\n7\n8\n")
    assert out == "567"
    assert reads == 3  # the fourth line was never consumed


def test_write_prints_decimal_without_newline():
    assert run_text(write_output(lo.lit(-2)), lo.LANG)[1] == "-2"
    assert run_text(seq(write_output(lo.lit(1)), write_output(lo.lit(2))), lo.LANG)[1] == "12"


def test_print_str_is_verbatim():
    assert run_text(print_str(""), lo.LANG)[1] == ""
    assert run_text(print_str('a\t"b"\n'), lo.LANG)[1] == 'a\t"b"\n'


def test_loop_bound_is_evaluated_exactly_once():
    calls = []

    def counting_eval(e):
        calls.append(e)
        return lo.eval_closed(e)

    lang = dataclasses.replace(lo.LANG, eval_closed=counting_eval)
    prog = for_loop(lang, lo.lit(5), lambda _i: print_str("."))
    _, out, _ = run_text(prog, lang)
    assert out == "....."
    assert calls == [lo.lit(5)]


def test_symbolic_values_cannot_reach_the_runtime():
    with pytest.raises(StageError):
        run_text(Instr(GetRef(SymbolicRef(TypeTag.I32, "r0"))), lo.LANG)


def test_languages_without_evaluation_cannot_run():
    mute = Language(name="mute", const=lo.LANG.const, var=lo.LANG.var)
    with pytest.raises(DslError):
        run_text(write_output(lo.lit(1)), mute)


def test_run_reports_result_and_consumed_lines():
    result, reads = run(ret(5), lo.LANG, io.StringIO(""), io.StringIO())
    assert (result, reads) == (5, 0)
