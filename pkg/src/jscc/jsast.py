"""AST for the ES5 subset allowed in method bodies.

Spans never participate in equality: two parses of the same text compare
equal even when taken from different positions, which is what the verbatim
round-trip checks rely on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from .diagnostics import Span


@dataclass
class Node:
    span: Span = field(compare=False, repr=False)


# --- expressions -----------------------------------------------------------

@dataclass
class Ident(Node):
    name: str


@dataclass
class NumberLit(Node):
    raw: str


@dataclass
class StringLit(Node):
    raw: str


@dataclass
class RegexLit(Node):
    raw: str


@dataclass
class BoolLit(Node):
    value: bool


@dataclass
class NullLit(Node):
    pass


@dataclass
class This(Node):
    pass


@dataclass
class ArrayLit(Node):
    elements: list  # None entries are elision holes


@dataclass
class Property(Node):
    key: str        # decoded identifier/string/number text
    value: object


@dataclass
class ObjectLit(Node):
    properties: list


@dataclass
class Member(Node):
    obj: object
    prop: str


@dataclass
class Index(Node):
    obj: object
    index: object


@dataclass
class Call(Node):
    callee: object
    args: list


@dataclass
class New(Node):
    callee: object
    args: object  # list of args, or None for `new X` without parentheses


@dataclass
class Unary(Node):
    op: str
    operand: object


@dataclass
class Update(Node):
    op: str
    operand: object
    prefix: bool


@dataclass
class Binary(Node):
    op: str
    left: object
    right: object


@dataclass
class Assign(Node):
    op: str
    target: object
    value: object


@dataclass
class Cond(Node):
    test: object
    cons: object
    alt: object


@dataclass
class Seq(Node):
    exprs: list


@dataclass
class FunctionExpr(Node):
    name: object      # str or None
    params: list
    body: list
    start: int = field(compare=False, default=0)  # offsets of `function`..`}`
    end: int = field(compare=False, default=0)


# --- statements ------------------------------------------------------------

@dataclass
class VarDecl(Node):
    name: str
    init: object  # expression or None


@dataclass
class VarStmt(Node):
    decls: list


@dataclass
class EmptyStmt(Node):
    pass


@dataclass
class ExprStmt(Node):
    expr: object


@dataclass
class Block(Node):
    body: list


@dataclass
class If(Node):
    test: object
    cons: object
    alt: object


@dataclass
class While(Node):
    test: object
    body: object


@dataclass
class DoWhile(Node):
    body: object
    test: object


@dataclass
class For(Node):
    init: object    # VarStmt, expression, or None
    test: object
    update: object
    body: object


@dataclass
class ForIn(Node):
    target: object  # VarDecl or a left-hand-side expression
    is_var: bool
    obj: object
    body: object


@dataclass
class Continue(Node):
    label: object


@dataclass
class Break(Node):
    label: object


@dataclass
class Return(Node):
    arg: object


@dataclass
class Throw(Node):
    arg: object


@dataclass
class Case(Node):
    test: object    # None for default
    body: list


@dataclass
class Switch(Node):
    disc: object
    cases: list


@dataclass
class Labeled(Node):
    label: str
    body: object


@dataclass
class Try(Node):
    block: object
    catch_param: object
    catch_body: object
    finally_body: object


@dataclass
class Debugger(Node):
    pass


@dataclass
class FuncDecl(Node):
    func: FunctionExpr
