"""The ``.etcs`` script language: parsing, pretty-printing and execution."""

from .interp import RunConfig, execute, exit_status
from .parser import parse, parse_with_diagnostics, tokenize
from .printer import pretty
from .syntax import Diagnostic, Script, ScriptError

__all__ = [
    "Diagnostic",
    "RunConfig",
    "Script",
    "ScriptError",
    "execute",
    "exit_status",
    "parse",
    "parse_with_diagnostics",
    "pretty",
    "tokenize",
]
