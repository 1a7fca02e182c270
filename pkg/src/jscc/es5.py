"""Recursive-descent parser for the ES5 subset used in method bodies.

Covers the full ES5 statement and expression grammar except `with` and
get/set object-literal properties, both rejected so bodies stay
strict-mode compatible.  Automatic semicolon insertion follows the ES5
rules for the supported statements, including the restricted productions
after return/throw/break/continue and before postfix ++/--.
"""

from __future__ import annotations

from . import jsast as J
from .diagnostics import (
    ACCESSOR_PROPERTY,
    BODY_SYNTAX,
    WITH_STATEMENT,
    DiagnosticError,
    Span,
    error,
)
from .lexer import Token, TokenKind, decode_string_literal, tokenize

# Binary operator precedence, higher binds tighter.
_BINARY_PREC = {
    "||": 1,
    "&&": 2,
    "|": 3,
    "^": 4,
    "&": 5,
    "==": 6, "!=": 6, "===": 6, "!==": 6,
    "<": 7, ">": 7, "<=": 7, ">=": 7, "instanceof": 7, "in": 7,
    "<<": 8, ">>": 8, ">>>": 8,
    "+": 9, "-": 9,
    "*": 10, "/": 10, "%": 10,
}

_ASSIGN_OPS = frozenset(
    ("=", "+=", "-=", "*=", "/=", "%=", "<<=", ">>=", ">>>=", "&=", "|=", "^=")
)

_UNARY_OPS = frozenset(("delete", "void", "typeof", "+", "-", "~", "!"))

_STATEMENT_KEYWORDS = frozenset(
    """var if while do for switch try throw return break continue
    debugger function with""".split()
)


class Es5Parser:
    def __init__(self, tokens: list[Token], file: str = "<string>"):
        self.toks = tokens
        self.file = file
        self.i = 0

    # -- token plumbing ------------------------------------------------

    @property
    def cur(self) -> Token:
        return self.toks[self.i]

    def span_of(self, tok: Token) -> Span:
        return tok.span(self.file)

    def span_from(self, start_tok: Token) -> Span:
        prev = self.toks[self.i - 1] if self.i > 0 else start_tok
        return Span(self.file, start_tok.line, start_tok.col, prev.end_line, prev.end_col)

    def fail(self, message: str, tok: Token | None = None, code: str = BODY_SYNTAX):
        tok = tok or self.cur
        raise DiagnosticError([error(code, message, self.span_of(tok))])

    def at(self, value: str) -> bool:
        tok = self.cur
        return tok.value == value and tok.kind in (TokenKind.PUNCT, TokenKind.KEYWORD)

    def eat(self, value: str) -> bool:
        if self.at(value):
            self.i += 1
            return True
        return False

    def expect(self, value: str) -> Token:
        if not self.at(value):
            self.fail(f"expected {value!r} but found {self.cur.value or 'end of input'!r}")
        tok = self.cur
        self.i += 1
        return tok

    def newline_before(self) -> bool:
        if self.i == 0:
            return False
        return self.cur.line > self.toks[self.i - 1].end_line

    def identifier(self) -> Token:
        tok = self.cur
        if tok.kind is not TokenKind.NAME:
            self.fail(f"expected identifier but found {tok.value or 'end of input'!r}")
        self.i += 1
        return tok

    def identifier_name(self) -> Token:
        # Property positions accept reserved words (IdentifierName).
        tok = self.cur
        if tok.kind not in (TokenKind.NAME, TokenKind.KEYWORD):
            self.fail(f"expected property name but found {tok.value or 'end of input'!r}")
        self.i += 1
        return tok

    def consume_semicolon(self):
        if self.eat(";"):
            return
        tok = self.cur
        if tok.kind is TokenKind.EOF or self.at("}") or self.newline_before():
            return
        self.fail(f"expected ';' but found {tok.value!r}")

    # -- functions -----------------------------------------------------

    def parse_function(self, is_declaration: bool) -> J.FunctionExpr:
        start_tok = self.expect("function")
        name = None
        if is_declaration:
            name = self.identifier().value
        elif self.cur.kind is TokenKind.NAME:
            name = self.identifier().value
        self.expect("(")
        params: list[str] = []
        if not self.eat(")"):
            while True:
                params.append(self.identifier().value)
                if self.eat(")"):
                    break
                self.expect(",")
        self.expect("{")
        body = []
        while not self.at("}"):
            if self.cur.kind is TokenKind.EOF:
                self.fail("unexpected end of input inside function body")
            body.append(self.parse_statement())
        close = self.expect("}")
        span = Span(self.file, start_tok.line, start_tok.col, close.end_line, close.end_col)
        return J.FunctionExpr(span, name, params, body, start_tok.start, close.end)

    # -- statements ----------------------------------------------------

    def parse_statement(self):
        tok = self.cur
        if tok.kind is TokenKind.KEYWORD:
            word = tok.value
            if word in _STATEMENT_KEYWORDS:
                return getattr(self, "stmt_" + word)()
            # this/typeof/new/... start expressions; other reserved words
            # fall through to the expression parser and fail there.
            return self.expression_statement()
        if tok.kind is TokenKind.PUNCT:
            if tok.value == "{":
                return self.parse_block()
            if tok.value == ";":
                self.i += 1
                return J.EmptyStmt(self.span_of(tok))
        return self.expression_statement()

    def parse_block(self) -> J.Block:
        start = self.expect("{")
        body = []
        while not self.at("}"):
            if self.cur.kind is TokenKind.EOF:
                self.fail("unexpected end of input inside block")
            body.append(self.parse_statement())
        close = self.expect("}")
        return J.Block(
            Span(self.file, start.line, start.col, close.end_line, close.end_col), body
        )

    def expression_statement(self):
        start = self.cur
        expr = self.parse_expression()
        if isinstance(expr, J.Ident) and self.at(":"):
            self.i += 1
            body = self.parse_statement()
            return J.Labeled(self.span_from(start), expr.name, body)
        self.consume_semicolon()
        return J.ExprStmt(self.span_from(start), expr)

    def stmt_function(self):
        start = self.cur
        func = self.parse_function(is_declaration=True)
        return J.FuncDecl(self.span_from(start), func)

    def stmt_with(self):
        self.fail(
            "'with' is not allowed; bodies must stay strict-mode compatible",
            code=WITH_STATEMENT,
        )

    def stmt_debugger(self):
        start = self.cur
        self.i += 1
        self.consume_semicolon()
        return J.Debugger(self.span_from(start))

    def stmt_var(self):
        start = self.cur
        self.i += 1
        decls = self.var_declarations(no_in=False)
        self.consume_semicolon()
        return J.VarStmt(self.span_from(start), decls)

    def var_declarations(self, no_in: bool) -> list[J.VarDecl]:
        decls = []
        while True:
            name_tok = self.identifier()
            init = None
            if self.eat("="):
                init = self.parse_assignment(no_in=no_in)
            decls.append(J.VarDecl(self.span_from(name_tok), name_tok.value, init))
            if not self.eat(","):
                return decls

    def stmt_if(self):
        start = self.cur
        self.i += 1
        self.expect("(")
        test = self.parse_expression()
        self.expect(")")
        cons = self.parse_statement()
        alt = self.parse_statement() if self.eat("else") else None
        return J.If(self.span_from(start), test, cons, alt)

    def stmt_while(self):
        start = self.cur
        self.i += 1
        self.expect("(")
        test = self.parse_expression()
        self.expect(")")
        body = self.parse_statement()
        return J.While(self.span_from(start), test, body)

    def stmt_do(self):
        start = self.cur
        self.i += 1
        body = self.parse_statement()
        self.expect("while")
        self.expect("(")
        test = self.parse_expression()
        self.expect(")")
        self.eat(";")  # semicolon after do-while is always insertable
        return J.DoWhile(self.span_from(start), body, test)

    def stmt_for(self):
        start = self.cur
        self.i += 1
        self.expect("(")
        init = None
        if self.at("var"):
            var_tok = self.cur
            self.i += 1
            decls = self.var_declarations(no_in=True)
            if self.at("in") and len(decls) == 1:
                self.i += 1
                return self.finish_for_in(start, decls[0], is_var=True)
            init = J.VarStmt(self.span_from(var_tok), decls)
        elif not self.at(";"):
            init = self.parse_expression(no_in=True)
            if self.at("in"):
                if not isinstance(init, (J.Ident, J.Member, J.Index)):
                    self.fail("invalid target for for-in")
                self.i += 1
                return self.finish_for_in(start, init, is_var=False)
        self.expect(";")
        test = None if self.at(";") else self.parse_expression()
        self.expect(";")
        update = None if self.at(")") else self.parse_expression()
        self.expect(")")
        body = self.parse_statement()
        return J.For(self.span_from(start), init, test, update, body)

    def finish_for_in(self, start: Token, target, is_var: bool):
        obj = self.parse_expression()
        self.expect(")")
        body = self.parse_statement()
        return J.ForIn(self.span_from(start), target, is_var, obj, body)

    def stmt_return(self):
        start = self.cur
        self.i += 1
        arg = None
        if not (self.at(";") or self.at("}") or self.cur.kind is TokenKind.EOF
                or self.newline_before()):
            arg = self.parse_expression()
        self.consume_semicolon()
        return J.Return(self.span_from(start), arg)

    def stmt_throw(self):
        start = self.cur
        self.i += 1
        if self.newline_before():
            self.fail("newline not allowed after 'throw'")
        arg = self.parse_expression()
        self.consume_semicolon()
        return J.Throw(self.span_from(start), arg)

    def stmt_break(self):
        return self.break_or_continue(J.Break)

    def stmt_continue(self):
        return self.break_or_continue(J.Continue)

    def break_or_continue(self, node_type):
        start = self.cur
        self.i += 1
        label = None
        if self.cur.kind is TokenKind.NAME and not self.newline_before():
            label = self.identifier().value
        self.consume_semicolon()
        return node_type(self.span_from(start), label)

    def stmt_switch(self):
        start = self.cur
        self.i += 1
        self.expect("(")
        disc = self.parse_expression()
        self.expect(")")
        self.expect("{")
        cases = []
        seen_default = False
        while not self.at("}"):
            case_tok = self.cur
            if self.eat("case"):
                test = self.parse_expression()
            elif self.eat("default"):
                if seen_default:
                    self.fail("multiple 'default' clauses in switch", case_tok)
                seen_default = True
                test = None
            else:
                self.fail(f"expected 'case' or 'default' but found {self.cur.value!r}")
            self.expect(":")
            body = []
            while not (self.at("case") or self.at("default") or self.at("}")):
                if self.cur.kind is TokenKind.EOF:
                    self.fail("unexpected end of input inside switch")
                body.append(self.parse_statement())
            cases.append(J.Case(self.span_from(case_tok), test, body))
        self.expect("}")
        return J.Switch(self.span_from(start), disc, cases)

    def stmt_try(self):
        start = self.cur
        self.i += 1
        block = self.parse_block()
        catch_param = catch_body = finally_body = None
        if self.eat("catch"):
            self.expect("(")
            catch_param = self.identifier().value
            self.expect(")")
            catch_body = self.parse_block()
        if self.eat("finally"):
            finally_body = self.parse_block()
        if catch_body is None and finally_body is None:
            self.fail("'try' needs a catch or finally clause")
        return J.Try(self.span_from(start), block, catch_param, catch_body, finally_body)

    # -- expressions ---------------------------------------------------

    def parse_expression(self, no_in: bool = False):
        start = self.cur
        expr = self.parse_assignment(no_in=no_in)
        if not self.at(","):
            return expr
        exprs = [expr]
        while self.eat(","):
            exprs.append(self.parse_assignment(no_in=no_in))
        return J.Seq(self.span_from(start), exprs)

    def parse_assignment(self, no_in: bool = False):
        start = self.cur
        expr = self.parse_conditional(no_in)
        tok = self.cur
        if tok.kind is TokenKind.PUNCT and tok.value in _ASSIGN_OPS:
            if not isinstance(expr, (J.Ident, J.Member, J.Index)):
                self.fail("invalid assignment target", tok)
            self.i += 1
            value = self.parse_assignment(no_in=no_in)
            return J.Assign(self.span_from(start), tok.value, expr, value)
        return expr

    def parse_conditional(self, no_in: bool):
        start = self.cur
        expr = self.parse_binary(0, no_in)
        if not self.eat("?"):
            return expr
        cons = self.parse_assignment()
        self.expect(":")
        alt = self.parse_assignment(no_in=no_in)
        return J.Cond(self.span_from(start), expr, cons, alt)

    def parse_binary(self, min_prec: int, no_in: bool):
        start = self.cur
        left = self.parse_unary()
        while True:
            tok = self.cur
            if tok.kind not in (TokenKind.PUNCT, TokenKind.KEYWORD):
                return left
            prec = _BINARY_PREC.get(tok.value, 0)
            if prec <= min_prec or (no_in and tok.value == "in"):
                return left
            self.i += 1
            right = self.parse_binary(prec, no_in)
            left = J.Binary(self.span_from(start), tok.value, left, right)

    def parse_unary(self):
        tok = self.cur
        if tok.kind in (TokenKind.PUNCT, TokenKind.KEYWORD):
            if tok.value in ("++", "--"):
                self.i += 1
                operand = self.parse_unary()
                if not isinstance(operand, (J.Ident, J.Member, J.Index)):
                    self.fail("invalid operand for prefix " + tok.value, tok)
                return J.Update(self.span_from(tok), tok.value, operand, True)
            if tok.value in _UNARY_OPS:
                self.i += 1
                operand = self.parse_unary()
                return J.Unary(self.span_from(tok), tok.value, operand)
        return self.parse_postfix()

    def parse_postfix(self):
        start = self.cur
        expr = self.parse_lhs()
        tok = self.cur
        if (
            tok.kind is TokenKind.PUNCT
            and tok.value in ("++", "--")
            and not self.newline_before()
        ):
            if not isinstance(expr, (J.Ident, J.Member, J.Index)):
                self.fail("invalid operand for postfix " + tok.value, tok)
            self.i += 1
            return J.Update(self.span_from(start), tok.value, expr, False)
        return expr

    def parse_lhs(self, allow_call: bool = True):
        start = self.cur
        if self.at("new"):
            self.i += 1
            callee = self.parse_lhs(allow_call=False)
            args = self.arguments() if self.at("(") else None
            expr = J.New(self.span_from(start), callee, args)
        else:
            expr = self.parse_primary()
        while True:
            if self.eat("."):
                prop = self.identifier_name()
                expr = J.Member(self.span_from(start), expr, prop.value)
            elif self.eat("["):
                index = self.parse_expression()
                self.expect("]")
                expr = J.Index(self.span_from(start), expr, index)
            elif allow_call and self.at("("):
                args = self.arguments()
                expr = J.Call(self.span_from(start), expr, args)
            else:
                return expr

    def arguments(self) -> list:
        self.expect("(")
        args = []
        if self.eat(")"):
            return args
        while True:
            args.append(self.parse_assignment())
            if self.eat(")"):
                return args
            self.expect(",")

    def parse_primary(self):
        tok = self.cur
        kind = tok.kind
        if kind is TokenKind.NAME:
            self.i += 1
            return J.Ident(self.span_of(tok), tok.value)
        if kind is TokenKind.NUMBER:
            self.i += 1
            return J.NumberLit(self.span_of(tok), tok.value)
        if kind is TokenKind.STRING:
            self.i += 1
            return J.StringLit(self.span_of(tok), tok.value)
        if kind is TokenKind.REGEX:
            self.i += 1
            return J.RegexLit(self.span_of(tok), tok.value)
        if kind is TokenKind.KEYWORD:
            if tok.value == "this":
                self.i += 1
                return J.This(self.span_of(tok))
            if tok.value in ("true", "false"):
                self.i += 1
                return J.BoolLit(self.span_of(tok), tok.value == "true")
            if tok.value == "null":
                self.i += 1
                return J.NullLit(self.span_of(tok))
            if tok.value == "function":
                return self.parse_function(is_declaration=False)
        if kind is TokenKind.PUNCT:
            if tok.value == "(":
                self.i += 1
                expr = self.parse_expression()
                self.expect(")")
                return expr
            if tok.value == "[":
                return self.array_literal()
            if tok.value == "{":
                return self.object_literal()
        self.fail(f"unexpected {tok.value or 'end of input'!r} in expression")

    def array_literal(self):
        start = self.expect("[")
        elements = []
        while not self.at("]"):
            if self.eat(","):
                elements.append(None)
                continue
            elements.append(self.parse_assignment())
            if not self.at("]"):
                self.expect(",")
        self.expect("]")
        return J.ArrayLit(self.span_from(start), elements)

    def object_literal(self):
        start = self.expect("{")
        props = []
        while not self.at("}"):
            props.append(self.object_property())
            if not self.at("}"):
                self.expect(",")
        self.expect("}")
        return J.ObjectLit(self.span_from(start), props)

    def object_property(self):
        tok = self.cur
        if (
            tok.kind is TokenKind.NAME
            and tok.value in ("get", "set")
            and not (
                self.toks[self.i + 1].value in (":", ",", "}")
                and self.toks[self.i + 1].kind is TokenKind.PUNCT
            )
        ):
            self.fail(
                "get/set object-literal properties are not supported",
                tok,
                code=ACCESSOR_PROPERTY,
            )
        if tok.kind in (TokenKind.NAME, TokenKind.KEYWORD):
            key = tok.value
            self.i += 1
        elif tok.kind is TokenKind.STRING:
            key = decode_string_literal(tok.value)
            self.i += 1
        elif tok.kind is TokenKind.NUMBER:
            key = tok.value
            self.i += 1
        else:
            self.fail(f"expected property name but found {tok.value or 'end of input'!r}")
        self.expect(":")
        value = self.parse_assignment()
        return J.Property(self.span_from(tok), key, value)


def parse_function_expression(
    tokens: list[Token], start_index: int, file: str = "<string>"
) -> tuple[J.FunctionExpr, int]:
    """Parse `function ... { ... }` starting at tokens[start_index].

    Returns the function and the index just past its closing brace.
    Raises DiagnosticError on any syntax error."""
    parser = Es5Parser(tokens, file)
    parser.i = start_index
    if not parser.at("function"):
        parser.fail("expected 'function'")
    func = parser.parse_function(is_declaration=False)
    return func, parser.i


def parse_expression_tokens(
    tokens: list[Token], start_index: int, file: str = "<string>"
):
    """Parse one assignment expression (no comma operator); returns
    (expression, index just past it)."""
    parser = Es5Parser(tokens, file)
    parser.i = start_index
    expr = parser.parse_assignment()
    return expr, parser.i


def parse_program(source: str, file: str = "<string>") -> list:
    """Parse a statement list (used by tests and the lint corpus)."""
    parser = Es5Parser(tokenize(source, file), file)
    body = []
    while parser.cur.kind is not TokenKind.EOF:
        body.append(parser.parse_statement())
    return body


def extract_body_text(fn: J.FunctionExpr, source: str) -> str:
    """The exact `function ... }` slice the function was parsed from."""
    return source[fn.start:fn.end]
