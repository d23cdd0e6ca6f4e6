"""stagedsl: an imperative embedded DSL with pluggable pure expressions, a
lowering pass from a rich expression language to a minimal one, a runtime
interpreter, and pseudo-code and C back ends."""

from . import highexpr, lowexpr
from .cgen import emit_c
from .core import (
    Bind,
    DslError,
    Instr,
    Language,
    Program,
    Ret,
    StageError,
    TagError,
    TypeTag,
    UnboundVariableError,
    for_loop,
    get_ref,
    init_ref,
    interpret,
    modify_ref,
    print_str,
    read_input,
    reexpress,
    ret,
    seq,
    set_ref,
    val_to_exp,
    wrap_i32,
    write_output,
)
from .examples import EXAMPLES, power_input, sum_input
from .pseudo import quote_string, render_program
from .runtime import InputError, run, run_text
from .translate import (
    DEFAULT_CONFIG,
    LetStrategy,
    TranslationConfig,
    UnrollPolicy,
    compile_pseudo,
    lower_expr,
    lower_program,
)

__all__ = [
    "Bind",
    "DslError",
    "EXAMPLES",
    "DEFAULT_CONFIG",
    "InputError",
    "Instr",
    "Language",
    "LetStrategy",
    "Program",
    "Ret",
    "StageError",
    "TagError",
    "TranslationConfig",
    "TypeTag",
    "UnboundVariableError",
    "UnrollPolicy",
    "compile_pseudo",
    "emit_c",
    "for_loop",
    "get_ref",
    "highexpr",
    "init_ref",
    "interpret",
    "lower_expr",
    "lower_program",
    "lowexpr",
    "modify_ref",
    "power_input",
    "print_str",
    "quote_string",
    "read_input",
    "reexpress",
    "render_program",
    "ret",
    "run",
    "run_text",
    "seq",
    "set_ref",
    "sum_input",
    "val_to_exp",
    "wrap_i32",
    "write_output",
]
