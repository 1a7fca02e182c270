"""Scope analysis for method bodies: find assignments that would create
globals at runtime.

A write-position identifier (left of an assignment operator, operand of
++/--, or the target of `for (x in ...)`) that resolves in no enclosing
function or catch scope is reported.  Reads are never reported, so calls
like `Class("...")` stay silent.  Writes to `eval`/`arguments` are always
reported; the CLI maps those to the strict-mode warning code.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import jsast as J
from .diagnostics import Span

STRICT_WRITE_NAMES = frozenset(("eval", "arguments"))


@dataclass(frozen=True)
class LintFinding:
    name: str
    span: Span
    kind: str  # "assignment" | "update" | "for-in-target"


class JsScope:
    """Set of names declared in one function (or catch) scope."""

    def __init__(self, declared: set[str], parent: "JsScope | None" = None):
        self.declared = declared
        self.parent = parent

    def resolves(self, name: str) -> bool:
        scope = self
        while scope is not None:
            if name in scope.declared:
                return True
            scope = scope.parent
        return False


def hoisted_names(body: list) -> set[str]:
    """Names hoisted to function scope: every `var` and nested function
    declaration in the body, not descending into nested functions."""
    names: set[str] = set()

    def visit(stmt):
        if isinstance(stmt, J.VarStmt):
            names.update(d.name for d in stmt.decls)
        elif isinstance(stmt, J.FuncDecl):
            names.add(stmt.func.name)
        elif isinstance(stmt, J.Block):
            for s in stmt.body:
                visit(s)
        elif isinstance(stmt, J.If):
            visit(stmt.cons)
            if stmt.alt is not None:
                visit(stmt.alt)
        elif isinstance(stmt, (J.While, J.DoWhile)):
            visit(stmt.body)
        elif isinstance(stmt, J.For):
            if isinstance(stmt.init, J.VarStmt):
                visit(stmt.init)
            visit(stmt.body)
        elif isinstance(stmt, J.ForIn):
            if stmt.is_var:
                names.add(stmt.target.name)
            visit(stmt.body)
        elif isinstance(stmt, J.Switch):
            for case in stmt.cases:
                for s in case.body:
                    visit(s)
        elif isinstance(stmt, J.Labeled):
            visit(stmt.body)
        elif isinstance(stmt, J.Try):
            visit(stmt.block)
            if stmt.catch_body is not None:
                visit(stmt.catch_body)
            if stmt.finally_body is not None:
                visit(stmt.finally_body)

    for stmt in body:
        visit(stmt)
    return names


def find_global_assignments(fn: J.FunctionExpr) -> list[LintFinding]:
    findings: list[LintFinding] = []

    def record(name: str, span: Span, kind: str, scope: JsScope):
        if name in STRICT_WRITE_NAMES or not scope.resolves(name):
            findings.append(LintFinding(name, span, kind))

    def enter_function(func: J.FunctionExpr, parent: JsScope | None):
        declared = set(func.params) | {"arguments"}
        if func.name:
            declared.add(func.name)
        declared |= hoisted_names(func.body)
        scope = JsScope(declared, parent)
        for stmt in func.body:
            walk_stmt(stmt, scope)

    def walk_stmt(stmt, scope: JsScope):
        if stmt is None or isinstance(stmt, (J.EmptyStmt, J.Debugger, J.Break, J.Continue)):
            return
        if isinstance(stmt, J.VarStmt):
            for decl in stmt.decls:
                if decl.init is not None:
                    walk_expr(decl.init, scope)
        elif isinstance(stmt, J.ExprStmt):
            walk_expr(stmt.expr, scope)
        elif isinstance(stmt, J.Block):
            for s in stmt.body:
                walk_stmt(s, scope)
        elif isinstance(stmt, J.If):
            walk_expr(stmt.test, scope)
            walk_stmt(stmt.cons, scope)
            walk_stmt(stmt.alt, scope)
        elif isinstance(stmt, J.While):
            walk_expr(stmt.test, scope)
            walk_stmt(stmt.body, scope)
        elif isinstance(stmt, J.DoWhile):
            walk_stmt(stmt.body, scope)
            walk_expr(stmt.test, scope)
        elif isinstance(stmt, J.For):
            if isinstance(stmt.init, J.VarStmt):
                walk_stmt(stmt.init, scope)
            elif stmt.init is not None:
                walk_expr(stmt.init, scope)
            if stmt.test is not None:
                walk_expr(stmt.test, scope)
            if stmt.update is not None:
                walk_expr(stmt.update, scope)
            walk_stmt(stmt.body, scope)
        elif isinstance(stmt, J.ForIn):
            if stmt.is_var:
                if stmt.target.init is not None:
                    walk_expr(stmt.target.init, scope)
            elif isinstance(stmt.target, J.Ident):
                record(stmt.target.name, stmt.target.span, "for-in-target", scope)
            else:
                walk_expr(stmt.target, scope)
            walk_expr(stmt.obj, scope)
            walk_stmt(stmt.body, scope)
        elif isinstance(stmt, (J.Return, J.Throw)):
            if stmt.arg is not None:
                walk_expr(stmt.arg, scope)
        elif isinstance(stmt, J.Switch):
            walk_expr(stmt.disc, scope)
            for case in stmt.cases:
                if case.test is not None:
                    walk_expr(case.test, scope)
                for s in case.body:
                    walk_stmt(s, scope)
        elif isinstance(stmt, J.Labeled):
            walk_stmt(stmt.body, scope)
        elif isinstance(stmt, J.Try):
            walk_stmt(stmt.block, scope)
            if stmt.catch_body is not None:
                catch_scope = JsScope({stmt.catch_param}, scope)
                walk_stmt(stmt.catch_body, catch_scope)
            if stmt.finally_body is not None:
                walk_stmt(stmt.finally_body, scope)
        elif isinstance(stmt, J.FuncDecl):
            enter_function(stmt.func, scope)
        else:
            raise TypeError(f"unexpected statement node {type(stmt).__name__}")

    def walk_expr(expr, scope: JsScope):
        if isinstance(
            expr,
            (J.Ident, J.NumberLit, J.StringLit, J.RegexLit, J.BoolLit, J.NullLit, J.This),
        ):
            return
        if isinstance(expr, J.Assign):
            if isinstance(expr.target, J.Ident):
                record(expr.target.name, expr.target.span, "assignment", scope)
            else:
                walk_expr(expr.target, scope)
            walk_expr(expr.value, scope)
        elif isinstance(expr, J.Update):
            if isinstance(expr.operand, J.Ident):
                record(expr.operand.name, expr.operand.span, "update", scope)
            else:
                walk_expr(expr.operand, scope)
        elif isinstance(expr, J.Unary):
            walk_expr(expr.operand, scope)
        elif isinstance(expr, J.Binary):
            walk_expr(expr.left, scope)
            walk_expr(expr.right, scope)
        elif isinstance(expr, J.Cond):
            walk_expr(expr.test, scope)
            walk_expr(expr.cons, scope)
            walk_expr(expr.alt, scope)
        elif isinstance(expr, J.Seq):
            for e in expr.exprs:
                walk_expr(e, scope)
        elif isinstance(expr, J.Member):
            walk_expr(expr.obj, scope)
        elif isinstance(expr, J.Index):
            walk_expr(expr.obj, scope)
            walk_expr(expr.index, scope)
        elif isinstance(expr, J.Call):
            walk_expr(expr.callee, scope)
            for arg in expr.args:
                walk_expr(arg, scope)
        elif isinstance(expr, J.New):
            walk_expr(expr.callee, scope)
            for arg in expr.args or ():
                walk_expr(arg, scope)
        elif isinstance(expr, J.ArrayLit):
            for element in expr.elements:
                if element is not None:
                    walk_expr(element, scope)
        elif isinstance(expr, J.ObjectLit):
            for prop in expr.properties:
                walk_expr(prop.value, scope)
        elif isinstance(expr, J.FunctionExpr):
            enter_function(expr, scope)
        else:
            raise TypeError(f"unexpected expression node {type(expr).__name__}")

    enter_function(fn, None)
    return findings
