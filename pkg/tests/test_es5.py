from __future__ import annotations

import pytest

from jscc import jsast as J
from jscc.diagnostics import DiagnosticError, Span
from jscc.es5 import (
    extract_body_text,
    parse_expression_tokens,
    parse_function_expression,
    parse_program,
)
from jscc.lexer import TokenKind, tokenize

from es5_corpus import INVALID, VALID

SP = Span("<x>", 1, 1, 1, 1)  # placeholder; spans never compare


def parse_fn(text: str) -> J.FunctionExpr:
    tokens = tokenize(text, "<body>")
    fn, end = parse_function_expression(tokens, 0, "<body>")
    assert tokens[end].kind is TokenKind.EOF
    return fn


def test_rectangle_area_body_shape():
    fn = parse_fn("function (){ return this.height * this.width; }")
    assert fn.params == []
    assert fn.body == [
        J.Return(
            SP,
            J.Binary(
                SP,
                "*",
                J.Member(SP, J.This(SP), "height"),
                J.Member(SP, J.This(SP), "width"),
            ),
        )
    ]


def test_empty_function():
    fn = parse_fn("function (){}")
    assert fn.params == []
    assert fn.body == []


def test_for_with_var_init_shape():
    fn = parse_fn("function (a){ for (var i=0;i<a;i++){} }")
    (loop,) = fn.body
    assert isinstance(loop, J.For)
    assert isinstance(loop.init, J.VarStmt)
    assert loop.init.decls == [J.VarDecl(SP, "i", J.NumberLit(SP, "0"))]
    assert loop.test == J.Binary(SP, "<", J.Ident(SP, "i"), J.Ident(SP, "a"))
    assert loop.update == J.Update(SP, "++", J.Ident(SP, "i"), False)
    assert loop.body == J.Block(SP, [])


@pytest.mark.parametrize(
    "text,expected",
    [
        ("a + b * c", J.Binary(SP, "+", J.Ident(SP, "a"),
                               J.Binary(SP, "*", J.Ident(SP, "b"), J.Ident(SP, "c")))),
        ("a * b + c", J.Binary(SP, "+",
                               J.Binary(SP, "*", J.Ident(SP, "a"), J.Ident(SP, "b")),
                               J.Ident(SP, "c"))),
        ("a - b - c", J.Binary(SP, "-",
                               J.Binary(SP, "-", J.Ident(SP, "a"), J.Ident(SP, "b")),
                               J.Ident(SP, "c"))),
        ("a = b = c", J.Assign(SP, "=", J.Ident(SP, "a"),
                               J.Assign(SP, "=", J.Ident(SP, "b"), J.Ident(SP, "c")))),
        ("a || b && c", J.Binary(SP, "||", J.Ident(SP, "a"),
                                 J.Binary(SP, "&&", J.Ident(SP, "b"), J.Ident(SP, "c")))),
        ("typeof a.b", J.Unary(SP, "typeof",
                               J.Member(SP, J.Ident(SP, "a"), "b"))),
        ("-a.b", J.Unary(SP, "-", J.Member(SP, J.Ident(SP, "a"), "b"))),
        ("!f()", J.Unary(SP, "!", J.Call(SP, J.Ident(SP, "f"), []))),
        ("new A().m", J.Member(SP, J.New(SP, J.Ident(SP, "A"), []), "m")),
        ("new a.b.C", J.New(SP, J.Member(SP, J.Member(SP, J.Ident(SP, "a"), "b"), "C"), None)),
        ("new new A()()", J.New(SP, J.New(SP, J.Ident(SP, "A"), []), [])),
        ("f(1)(2)", J.Call(SP, J.Call(SP, J.Ident(SP, "f"), [J.NumberLit(SP, "1")]),
                           [J.NumberLit(SP, "2")])),
        ("a.b[c].d", J.Member(SP, J.Index(SP, J.Member(SP, J.Ident(SP, "a"), "b"),
                                          J.Ident(SP, "c")), "d")),
        ("a ? b : c ? d : e", J.Cond(SP, J.Ident(SP, "a"), J.Ident(SP, "b"),
                                     J.Cond(SP, J.Ident(SP, "c"), J.Ident(SP, "d"),
                                            J.Ident(SP, "e")))),
        ("a in b", J.Binary(SP, "in", J.Ident(SP, "a"), J.Ident(SP, "b"))),
    ],
)
def test_expression_shapes(text, expected):
    tokens = tokenize(text)
    expr, end = parse_expression_tokens(tokens, 0)
    assert tokens[end].kind is TokenKind.EOF
    assert expr == expected


def test_array_holes():
    fn = parse_fn("function (){ return [1, , 2, ]; }")
    (ret,) = fn.body
    assert ret.arg == J.ArrayLit(
        SP, [J.NumberLit(SP, "1"), None, J.NumberLit(SP, "2")]
    )


def test_object_property_keys():
    fn = parse_fn("function (){ return { a: 1, 'b c': 2, 3: x, while: y }; }")
    (ret,) = fn.body
    assert [prop.key for prop in ret.arg.properties] == ["a", "b c", "3", "while"]


def test_asi_inserts_between_lines():
    fn = parse_fn("function (){ var a = 1\nvar b = 2\nreturn a + b }")
    kinds = [type(stmt).__name__ for stmt in fn.body]
    assert kinds == ["VarStmt", "VarStmt", "Return"]


def test_asi_restricted_return():
    fn = parse_fn("function (){ return\n1; }")
    assert isinstance(fn.body[0], J.Return) and fn.body[0].arg is None
    assert isinstance(fn.body[1], J.ExprStmt)


def test_asi_restricted_postfix():
    fn = parse_fn("function (a){ a\n++a }")
    assert isinstance(fn.body[0], J.ExprStmt)
    assert fn.body[0].expr == J.Ident(SP, "a")
    assert fn.body[1].expr == J.Update(SP, "++", J.Ident(SP, "a"), True)


def test_call_continues_across_newline():
    fn = parse_fn("function (a, b){ a = b\n(a).f() }")
    assert len(fn.body) == 1  # `b (a)` is one call expression, per ES5 ASI


def test_for_in_var_with_legacy_initializer():
    fn = parse_fn("function (o){ for (var k = 'a' in o) f(k); }")
    (loop,) = fn.body
    assert isinstance(loop, J.ForIn) and loop.is_var
    assert loop.target.name == "k"
    assert loop.target.init == J.StringLit(SP, "'a'")


def test_in_operator_allowed_inside_for_init_parens():
    fn = parse_fn("function (a, o){ for (x = (a in o); x; x = 0) {} }")
    (loop,) = fn.body
    assert isinstance(loop, J.For)
    assert loop.init.value == J.Binary(SP, "in", J.Ident(SP, "a"), J.Ident(SP, "o"))


def test_named_function_expression():
    fn = parse_fn("function (){ var f = function g(){ return g; }; return f; }")
    inner = fn.body[0].decls[0].init
    assert isinstance(inner, J.FunctionExpr) and inner.name == "g"


@pytest.mark.parametrize("text", VALID, ids=range(len(VALID)))
def test_corpus_accepts(text):
    parse_fn(text)


@pytest.mark.parametrize(
    "text,code", INVALID, ids=[code + "-" + str(i) for i, (_, code) in enumerate(INVALID)]
)
def test_corpus_rejects(text, code):
    with pytest.raises(DiagnosticError) as exc:
        parse_fn(text)
    assert exc.value.diagnostics[-1].code == code


@pytest.mark.parametrize("text", VALID, ids=range(len(VALID)))
def test_corpus_round_trip(text):
    # Parse the function embedded in a larger source, slice it back out,
    # re-parse the slice standalone: ASTs must match structurally.
    source = "lead = marker; " + text + "\n; trail()"
    tokens = tokenize(source, "<embedded>")
    fn, _end = parse_function_expression(tokens, 4, "<embedded>")
    sliced = extract_body_text(fn, source)
    assert sliced == text
    again = parse_fn(sliced)
    assert again == fn


def test_extract_is_byte_exact_with_comments():
    text = "function (){ /* keep me */ return 1; // tail\n}"
    fn = parse_fn(text)
    assert extract_body_text(fn, text) == text


def test_parse_is_deterministic():
    text = VALID[40]
    assert parse_fn(text) == parse_fn(text)


def test_parse_program_statements():
    body = parse_program("var a = 1; f(a); if (a) { a = 2; }")
    assert [type(s).__name__ for s in body] == ["VarStmt", "ExprStmt", "If"]


def test_error_spans_point_into_source():
    with pytest.raises(DiagnosticError) as exc:
        parse_fn("function (){\n  a +* b;\n}")
    span = exc.value.diagnostics[0].span
    assert (span.start_line, span.start_col) == (2, 6)
