"""jscc: compiler for JSC, a class-based superset of JavaScript.

Parses `.jsc` units, validates packages, mixin inheritance and protocol
conformance, lints undeclared global assignments, and emits a single
self-contained classpool image whose only global is `Class`.
"""

from .codegen import ClasspoolImage, ImageOptions, emit_image, emit_registration
from .diagnostics import Diagnostic, DiagnosticError, Severity, Span
from .es5 import extract_body_text, parse_function_expression
from .lint import LintFinding, find_global_assignments
from .pool import (
    ClassPool,
    EffectiveMembers,
    build_pool,
    check_protocols,
    derive_accessor_names,
    effective_members,
    initialization_order,
    resolve_supers,
)
from .syntax import ClassDecl, ProtocolDecl, SourceUnit, parse_unit

__version__ = "0.1.0"

__all__ = [
    "ClassDecl",
    "ClassPool",
    "ClasspoolImage",
    "Diagnostic",
    "DiagnosticError",
    "EffectiveMembers",
    "ImageOptions",
    "LintFinding",
    "ProtocolDecl",
    "Severity",
    "SourceUnit",
    "Span",
    "__version__",
    "build_pool",
    "check_protocols",
    "derive_accessor_names",
    "effective_members",
    "emit_image",
    "emit_registration",
    "extract_body_text",
    "find_global_assignments",
    "initialization_order",
    "parse_function_expression",
    "parse_unit",
    "resolve_supers",
]
