"""Diagnostic codes, spans, and rendering shared by every compiler stage."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum


class Severity(Enum):
    ERROR = "error"
    WARNING = "warning"


# Stable diagnostic codes. E codes block emission, W codes do not.
UNTERMINATED = "JSC-E001"          # unterminated string / comment / regex
DUPLICATE_CTOR = "JSC-E002"        # more than one constructor in a class
SUPER_CYCLE = "JSC-E003"           # cycle in the super graph
DUPLICATE_MEMBER = "JSC-E004"      # duplicate slot or method in one declaration
BAD_PROTOCOL_FLAG = "JSC-E005"     # protocol member value not true/false
TRAILING_GARBAGE = "JSC-E006"      # text after the class/protocol declaration
DUPLICATE_NAME = "JSC-E007"        # duplicate canonical name in the pool
FILE_STEM_MISMATCH = "JSC-E008"    # file stem differs from declared name
PACKAGE_DIR_MISMATCH = "JSC-E009"  # directory path differs from package
ACCESSOR_COLLISION = "JSC-E010"    # derived accessor collides with a method
RESERVED_STATIC = "JSC-E011"       # static name collides with meta-class member
PROTOCOL_SUPER_CLASS = "JSC-E012"  # protocol extending a class
UNRESOLVED_SUPER = "JSC-E013"      # super name not found in the pool
UNIT_SYNTAX = "JSC-E014"           # malformed package/class/protocol declaration
BAD_CHAR = "JSC-E015"              # character no token can start with
WITH_STATEMENT = "JSC-E020"        # `with` is rejected (image runs strict)
BODY_SYNTAX = "JSC-E021"           # syntax error inside a function body
ACCESSOR_PROPERTY = "JSC-E022"     # get/set object-literal properties rejected
PROTOCOL_UNSATISFIED = "JSC-E030"  # required protocol method missing
NO_INPUT = "JSC-E040"              # no .jsc files under the given roots
GLOBAL_WRITE = "JSC-W001"          # assignment to an undeclared name
MEMBER_REPLACED = "JSC-W002"       # mixin member replaced across origins
STRICT_WRITE = "JSC-W003"          # write to eval/arguments


@dataclass(frozen=True)
class Span:
    """Source region; 1-based lines and columns, columns count code points,
    end column is exclusive."""

    file: str
    start_line: int
    start_col: int
    end_line: int
    end_col: int

    def __str__(self) -> str:
        return f"{self.file}:{self.start_line}:{self.start_col}"


@dataclass(frozen=True)
class Diagnostic:
    code: str
    severity: Severity
    message: str
    span: Span
    notes: tuple[tuple[str, Span], ...] = field(default=())

    @property
    def is_error(self) -> bool:
        return self.severity is Severity.ERROR

    def render(self) -> str:
        lines = [
            f"{self.span}: {self.severity.value} {self.code}: {self.message}"
        ]
        for text, span in self.notes:
            lines.append(f"{span}: note: {text}")
        return "\n".join(lines)

    def render_json(self) -> str:
        return json.dumps(
            {
                "severity": self.severity.value,
                "code": self.code,
                "message": self.message,
                "file": self.span.file,
                "line": self.span.start_line,
                "col": self.span.start_col,
                "endLine": self.span.end_line,
                "endCol": self.span.end_col,
            },
            separators=(", ", ": "),
        )


def error(code: str, message: str, span: Span, notes=()) -> Diagnostic:
    return Diagnostic(code, Severity.ERROR, message, span, tuple(notes))


def warning(code: str, message: str, span: Span, notes=()) -> Diagnostic:
    return Diagnostic(code, Severity.WARNING, message, span, tuple(notes))


def sort_key(diag: Diagnostic):
    """Stable output order: file path, start position, code."""
    s = diag.span
    return (s.file, s.start_line, s.start_col, diag.code)


def has_errors(diags) -> bool:
    return any(d.is_error for d in diags)


class DiagnosticError(Exception):
    """Raised by stages that cannot return partial results."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        first = self.diagnostics[0]
        super().__init__(first.render())
