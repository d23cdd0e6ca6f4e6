"""Run programs against a line-oriented input source and a text sink.

Works for any expression language that can evaluate closed expressions.
Input and output are injectable, so tests can script a session; the CLI
plugs in the process's stdio.
"""

from __future__ import annotations

import io
import re
from typing import Any, TextIO

from . import core
from .core import (
    ConcreteRef,
    ConcreteVal,
    DslError,
    ForLoop,
    GetRef,
    InitRef,
    Instruction,
    Language,
    PrintStr,
    Program,
    ReadInput,
    Ref,
    SetRef,
    StageError,
    TypeTag,
    WriteOutput,
    wrap_i32,
)


class InputError(DslError):
    """Missing or malformed console input."""


_DECIMAL = re.compile(r"[+-]?[0-9]+")


class _Runner:
    def __init__(self, lang: Language, stdin: TextIO, stdout: TextIO):
        self._eval = lang.eval_closed
        self._stdin = stdin
        self._stdout = stdout
        self.reads = 0

    def _cell(self, ref: Ref) -> ConcreteRef:
        if isinstance(ref, ConcreteRef):
            return ref
        raise StageError("symbolic reference reached the runtime interpreter")

    def handle(self, cmd: Instruction):
        match cmd:
            case InitRef(init):
                return ConcreteRef(init.tag, self._eval(init))
            case GetRef(ref):
                cell = self._cell(ref)
                return ConcreteVal(cell.tag, cell.value)
            case SetRef(ref, value):
                self._cell(ref).value = self._eval(value)
                return None
            case ReadInput():
                line = self._stdin.readline()
                if line == "":
                    raise InputError("input exhausted")
                text = line.strip()
                if not _DECIMAL.fullmatch(text):
                    raise InputError(f"not a decimal integer: {text!r}")
                self.reads += 1
                return ConcreteVal(TypeTag.I32, wrap_i32(int(text)))
            case WriteOutput(value):
                self._stdout.write(str(self._eval(value)))
                return None
            case PrintStr(text):
                self._stdout.write(text)
                return None
            case ForLoop(count, body):
                # evaluate the bound once, before any iteration runs
                n = self._eval(count)
                for k in range(max(n, 0)):
                    core.interpret(self.handle, body(ConcreteVal(TypeTag.I32, k)))
                return None
        raise DslError(f"not an instruction: {cmd!r}")


def run(prog: Program, lang: Language, stdin: TextIO, stdout: TextIO) -> tuple[Any, int]:
    """Interpret a program.  Returns its result and the number of input
    lines consumed."""
    if lang.eval_closed is None:
        raise DslError(f"language {lang.name!r} cannot evaluate expressions")
    runner = _Runner(lang, stdin, stdout)
    result = core.interpret(runner.handle, prog)
    return result, runner.reads


def run_text(prog: Program, lang: Language, text: str = "") -> tuple[Any, str, int]:
    """Run against string input, capturing output.  Returns (result, output,
    lines consumed)."""
    out = io.StringIO()
    result, reads = run(prog, lang, io.StringIO(text), out)
    return result, out.getvalue(), reads
