"""Deep embedding of imperative programs over a pluggable expression language.

A program is a tree of Return / Bind / Instr nodes.  The instruction set is
fixed (references, console input/output, counted loops); the expression
language is not.  Anything that wants to consume a program, whether to run
it, print it, or rewrite it into a program over a different expression
language, does so by folding over the tree, and must behave identically no
matter how the Bind nodes happen to be nested.

Loop and continuation bodies are ordinary host functions.  They are
instantiated once per interpretation, with concrete values when running and
with symbolic names when generating code.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable


class TypeTag(Enum):
    """The closed universe of value types a program can manipulate."""

    I32 = "i32"
    BOOL = "bool"

    def __repr__(self) -> str:
        return f"TypeTag.{self.name}"


def wrap_i32(n: int) -> int:
    """Reduce an integer into two's-complement 32-bit range."""
    return (n + 2**31) % 2**32 - 2**31


class DslError(Exception):
    """Base class for every error this kit raises deliberately."""


class TagError(DslError):
    """Operands with incompatible type tags met at construction time."""


class StageError(DslError):
    """A value crossed stages: a symbolic name reached the runtime
    interpreter, or a live runtime cell reached a code generator.  Always a
    bug in an interpretation, never in user programs."""


class UnboundVariableError(DslError):
    """Closed evaluation met a variable."""


# --------------------------------------------------------------------------
# Staged values.  Instructions yield Vals and Refs; each is either a live
# runtime object (concrete) or a generated name (symbolic).

@dataclass(frozen=True)
class ConcreteVal:
    tag: TypeTag
    value: Any


@dataclass(frozen=True)
class SymbolicVal:
    tag: TypeTag
    name: str


@dataclass(eq=False)
class ConcreteRef:
    """A mutable cell.  Identity matters, so no structural equality."""

    tag: TypeTag
    value: Any


@dataclass(frozen=True)
class SymbolicRef:
    tag: TypeTag
    name: str


Val = ConcreteVal | SymbolicVal
Ref = ConcreteRef | SymbolicRef


# --------------------------------------------------------------------------
# Instructions.  Expression operands are duck-typed: anything with a .tag.
# Tag checks happen here, when the instruction is built, so an ill-tagged
# program can never reach an interpretation.

@dataclass(frozen=True)
class InitRef:
    """Allocate a reference initialised to the expression's value."""

    init: Any


@dataclass(frozen=True)
class GetRef:
    """Yield the current value of a reference."""

    ref: Ref


@dataclass(frozen=True)
class SetRef:
    ref: Ref
    value: Any

    def __post_init__(self) -> None:
        if self.ref.tag is not self.value.tag:
            raise TagError(
                f"setRef: reference holds {self.ref.tag.value}, "
                f"expression has {self.value.tag.value}"
            )


@dataclass(frozen=True)
class ReadInput:
    """Read one line of input as a 32-bit integer."""


@dataclass(frozen=True)
class WriteOutput:
    value: Any

    def __post_init__(self) -> None:
        if self.value.tag is not TypeTag.I32:
            raise TagError(f"writeOutput: needs i32, got {self.value.tag.value}")


@dataclass(frozen=True)
class PrintStr:
    text: str


@dataclass(frozen=True)
class ForLoop:
    """Run body(counter) for counter = 0 .. count-1.

    The body receives the counter as a Val and returns the program for one
    iteration.  A non-positive count means zero iterations.
    """

    count: Any
    body: Callable[[Val], "Program"]

    def __post_init__(self) -> None:
        if self.count.tag is not TypeTag.I32:
            raise TagError(f"for: count must be i32, got {self.count.tag.value}")


Instruction = InitRef | GetRef | SetRef | ReadInput | WriteOutput | PrintStr | ForLoop


# --------------------------------------------------------------------------
# Program trees.

class Program:
    """Base class for the three node shapes.

    Interpretations may not inspect how Binds nest; the tree is built by
    whatever order the combinators were applied in, and equivalent
    bracketings must be indistinguishable.
    """

    def bind(self, rest: Callable[[Any], "Program"]) -> "Program":
        return Bind(self, rest)

    def then(self, nxt: "Program") -> "Program":
        return Bind(self, lambda _result: nxt)


@dataclass(frozen=True)
class Ret(Program):
    value: Any


@dataclass(frozen=True)
class Bind(Program):
    first: Program
    rest: Callable[[Any], Program]


@dataclass(frozen=True)
class Instr(Program):
    cmd: Instruction


def ret(value: Any = None) -> Program:
    return Ret(value)


def seq(*steps: Program) -> Program:
    """Run steps in order; the result is the last step's result."""
    if not steps:
        return Ret(None)
    return functools.reduce(lambda acc, p: acc.then(p), steps)


def interpret(handler: Callable[[Instruction], Any], prog: Program) -> Any:
    """Fold a program with a per-instruction handler.

    Return nodes produce their value, Bind nodes sequence, Instr nodes go to
    the handler, which performs whatever effect it stands for and returns the
    instruction's result.  Iterative on the Bind spine, so only loop nesting
    recurses (inside handlers that choose to).
    """
    pending: list[Callable[[Any], Program]] = []
    current = prog
    while True:
        if isinstance(current, Bind):
            pending.append(current.rest)
            current = current.first
            continue
        if isinstance(current, Ret):
            result = current.value
        elif isinstance(current, Instr):
            result = handler(current.cmd)
        else:
            raise DslError(f"not a program node: {current!r}")
        if not pending:
            return result
        current = pending.pop()(result)


# --------------------------------------------------------------------------
# Expression-language capabilities, and the front end that is generic in
# them.  A Language says how to build literals and variables, and optionally
# how to evaluate closed expressions and how to print them.

@dataclass(frozen=True)
class Language:
    name: str
    const: Callable[[TypeTag, Any], Any]
    var: Callable[[TypeTag, str], Any]
    eval_closed: Callable[[Any], Any] | None = None
    render: Callable[[Any], str] | None = None


def val_to_exp(lang: Language, val: Val) -> Any:
    """Inject an instruction result back into an expression language."""
    if isinstance(val, ConcreteVal):
        return lang.const(val.tag, val.value)
    if isinstance(val, SymbolicVal):
        return lang.var(val.tag, val.name)
    raise StageError(f"not a value: {val!r}")


def init_ref(init: Any) -> Program:
    return Instr(InitRef(init))

def get_ref(lang: Language, ref: Ref) -> Program:
    return Instr(GetRef(ref)).bind(lambda val: Ret(val_to_exp(lang, val)))

def set_ref(ref: Ref, value: Any) -> Program:
    return Instr(SetRef(ref, value))

def modify_ref(lang: Language, ref: Ref, update: Callable[[Any], Any]) -> Program:
    return get_ref(lang, ref).bind(lambda e: set_ref(ref, update(e)))

def read_input(lang: Language) -> Program:
    return Instr(ReadInput()).bind(lambda val: Ret(val_to_exp(lang, val)))

def write_output(value: Any) -> Program:
    return Instr(WriteOutput(value))

def print_str(text: str) -> Program:
    return Instr(PrintStr(text))

def for_loop(lang: Language, count: Any, body: Callable[[Any], Program]) -> Program:
    """Counted loop; body receives the counter as an expression."""
    return Instr(ForLoop(count, lambda val: body(val_to_exp(lang, val))))


# --------------------------------------------------------------------------
# Changing the expression language of a whole program.

def reexpress(translate_expr: Callable[[Any], Program], prog: Program) -> Program:
    """Rewrite a program over one expression language into a program over
    another, given a translation for individual expressions.

    The translation returns a program so it may emit setup instructions
    ahead of the expression it delivers.  Program structure is otherwise
    preserved: instructions stay in order, loop bodies are translated
    recursively when instantiated.
    """
    if isinstance(prog, Ret):
        return prog
    if isinstance(prog, Bind):
        first = reexpress(translate_expr, prog.first)
        rest = prog.rest
        return Bind(first, lambda v: reexpress(translate_expr, rest(v)))
    if isinstance(prog, Instr):
        return reexpress_cmd(translate_expr, prog.cmd)
    raise DslError(f"not a program node: {prog!r}")


def reexpress_cmd(translate_expr: Callable[[Any], Program], cmd: Instruction) -> Program:
    match cmd:
        case InitRef(init):
            return translate_expr(init).bind(lambda e: Instr(InitRef(e)))
        case SetRef(ref, value):
            return translate_expr(value).bind(lambda e: Instr(SetRef(ref, e)))
        case WriteOutput(value):
            return translate_expr(value).bind(lambda e: Instr(WriteOutput(e)))
        case ForLoop(count, body):
            return translate_expr(count).bind(
                lambda c: Instr(
                    ForLoop(c, lambda val: reexpress(translate_expr, body(val)))
                )
            )
        case GetRef() | ReadInput() | PrintStr():
            return Instr(cmd)
    raise DslError(f"not an instruction: {cmd!r}")
