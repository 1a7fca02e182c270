"""ES5 tokenizer shared by the unit parser and the function-body parser.

Regex literals are disambiguated by the previous significant token: a `/`
after an identifier, a literal (including `this`/`true`/`false`/`null`),
`)` or `]` is division, anywhere else it starts a regex literal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .diagnostics import BAD_CHAR, UNTERMINATED, DiagnosticError, Span, error


class TokenKind(Enum):
    NAME = "name"
    KEYWORD = "keyword"
    PUNCT = "punct"
    NUMBER = "number"
    STRING = "string"
    REGEX = "regex"
    EOF = "eof"


# ES5 reserved words (keywords, future reserved words, and the literal
# keywords).  The strict-only future words (package, static, ...) are NOT
# reserved here: `package` is a unit-level keyword only and bodies stay
# plain ES5.
KEYWORDS = frozenset(
    """
    break case catch class const continue debugger default delete do else
    enum export extends finally for function if import in instanceof new
    return super switch this throw try typeof var void while with
    null true false
    """.split()
)

PUNCTUATORS = (
    ">>>=",
    "===", "!==", ">>>", "<<=", ">>=",
    "==", "!=", "<=", ">=", "&&", "||", "++", "--", "<<", ">>",
    "+=", "-=", "*=", "%=", "&=", "|=", "^=", "/=",
    "{", "}", "(", ")", "[", "]", ".", ";", ",", "<", ">", "+", "-", "*",
    "%", "&", "|", "^", "!", "~", "?", ":", "=", "/",
)

# Tokens a `/` can follow while still meaning division.
_DIVISION_KEYWORDS = frozenset(("this", "true", "false", "null"))
_DIVISION_PUNCT = frozenset((")", "]"))

_IDENT_RE = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*")
_NUMBER_RE = re.compile(
    r"0[xX][0-9a-fA-F]+|(?:[0-9]+\.[0-9]*|\.[0-9]+|[0-9]+)(?:[eE][+-]?[0-9]+)?"
)
_WS = " \t\v\f﻿ "
_LINE_TERMINATORS = "\n\r  "

_PUNCT_BY_FIRST: dict[str, tuple[str, ...]] = {}
for _p in PUNCTUATORS:
    _PUNCT_BY_FIRST.setdefault(_p[0], ())
    _PUNCT_BY_FIRST[_p[0]] += (_p,)


@dataclass(slots=True)
class Token:
    kind: TokenKind
    value: str
    start: int
    end: int
    line: int
    col: int
    end_line: int
    end_col: int

    def span(self, file: str) -> Span:
        return Span(file, self.line, self.col, self.end_line, self.end_col)

    def __repr__(self) -> str:  # compact for test failure output
        return f"<{self.kind.value} {self.value!r} @{self.line}:{self.col}>"


def is_identifier(text: str) -> bool:
    return bool(_IDENT_RE.fullmatch(text)) and text not in KEYWORDS


class _Scanner:
    def __init__(self, source: str, file: str):
        self.src = source
        self.file = file
        self.pos = 0
        self.line = 1
        self.line_start = 0
        self.tokens: list[Token] = []
        self.comment_spans: list[Span] = []

    def col(self, pos: int) -> int:
        return pos - self.line_start + 1

    def fail(self, code: str, message: str, start: int, start_line: int, start_col: int):
        span = Span(self.file, start_line, start_col, self.line, self.col(self.pos))
        raise DiagnosticError([error(code, message, span)])

    def newline(self, pos_after: int):
        self.line += 1
        self.line_start = pos_after

    def skip_line_terminator(self) -> bool:
        ch = self.src[self.pos]
        if ch == "\r":
            self.pos += 1
            if self.pos < len(self.src) and self.src[self.pos] == "\n":
                self.pos += 1
            self.newline(self.pos)
            return True
        if ch in "\n  ":
            self.pos += 1
            self.newline(self.pos)
            return True
        return False

    def scan(self) -> list[Token]:
        src = self.src
        n = len(src)
        while self.pos < n:
            ch = src[self.pos]
            if ch in _WS:
                self.pos += 1
                continue
            if ch in _LINE_TERMINATORS:
                self.skip_line_terminator()
                continue
            if ch == "/" and self.pos + 1 < n and src[self.pos + 1] == "/":
                self.line_comment()
                continue
            if ch == "/" and self.pos + 1 < n and src[self.pos + 1] == "*":
                self.block_comment()
                continue
            self.token(ch)
        self.tokens.append(
            Token(TokenKind.EOF, "", n, n, self.line, self.col(n), self.line, self.col(n))
        )
        return self.tokens

    def line_comment(self):
        line, col = self.line, self.col(self.pos)
        nl = len(self.src)
        for term in _LINE_TERMINATORS:
            i = self.src.find(term, self.pos)
            if i != -1 and i < nl:
                nl = i
        self.pos = nl
        self.comment_spans.append(Span(self.file, line, col, self.line, self.col(self.pos)))

    def block_comment(self):
        start, line, col = self.pos, self.line, self.col(self.pos)
        self.pos += 2
        src = self.src
        n = len(src)
        while self.pos < n:
            if src[self.pos] == "*" and self.pos + 1 < n and src[self.pos + 1] == "/":
                self.pos += 2
                self.comment_spans.append(
                    Span(self.file, line, col, self.line, self.col(self.pos))
                )
                return
            if src[self.pos] in _LINE_TERMINATORS:
                self.skip_line_terminator()
            else:
                self.pos += 1
        self.fail(UNTERMINATED, "unterminated block comment", start, line, col)

    def emit(self, kind: TokenKind, value: str, start: int, line: int, col: int):
        self.tokens.append(
            Token(kind, value, start, self.pos, line, col, self.line, self.col(self.pos))
        )

    def token(self, ch: str):
        start, line, col = self.pos, self.line, self.col(self.pos)
        src = self.src

        m = _IDENT_RE.match(src, start)
        if m:
            self.pos = m.end()
            word = m.group()
            kind = TokenKind.KEYWORD if word in KEYWORDS else TokenKind.NAME
            self.emit(kind, word, start, line, col)
            return

        if ch.isdigit() or (ch == "." and start + 1 < len(src) and src[start + 1].isdigit()):
            m = _NUMBER_RE.match(src, start)
            self.pos = m.end()
            self.emit(TokenKind.NUMBER, m.group(), start, line, col)
            return

        if ch in "'\"":
            self.string_literal(start, line, col)
            return

        if ch == "/" and self.regex_allowed():
            self.regex_literal(start, line, col)
            return

        for punct in _PUNCT_BY_FIRST.get(ch, ()):
            if src.startswith(punct, start):
                self.pos = start + len(punct)
                self.emit(TokenKind.PUNCT, punct, start, line, col)
                return

        self.pos += 1
        self.fail(BAD_CHAR, f"unexpected character {ch!r}", start, line, col)

    def regex_allowed(self) -> bool:
        if not self.tokens:
            return True
        prev = self.tokens[-1]
        if prev.kind in (TokenKind.NAME, TokenKind.NUMBER, TokenKind.STRING, TokenKind.REGEX):
            return False
        if prev.kind is TokenKind.PUNCT and prev.value in _DIVISION_PUNCT:
            return False
        if prev.kind is TokenKind.KEYWORD and prev.value in _DIVISION_KEYWORDS:
            return False
        return True

    def string_literal(self, start: int, line: int, col: int):
        src = self.src
        n = len(src)
        quote = src[start]
        self.pos = start + 1
        while self.pos < n:
            ch = src[self.pos]
            if ch == quote:
                self.pos += 1
                self.emit(TokenKind.STRING, src[start:self.pos], start, line, col)
                return
            if ch == "\\":
                self.pos += 1
                if self.pos < n and not self.skip_line_terminator():
                    self.pos += 1
                continue
            if ch in _LINE_TERMINATORS:
                break
            self.pos += 1
        self.fail(UNTERMINATED, "unterminated string literal", start, line, col)

    def regex_literal(self, start: int, line: int, col: int):
        src = self.src
        n = len(src)
        self.pos = start + 1
        in_class = False
        while self.pos < n:
            ch = src[self.pos]
            if ch in _LINE_TERMINATORS:
                break
            if ch == "\\":
                self.pos += 2
                continue
            if ch == "[":
                in_class = True
            elif ch == "]":
                in_class = False
            elif ch == "/" and not in_class:
                self.pos += 1
                while self.pos < n and _IDENT_RE.match(src, self.pos):
                    self.pos = _IDENT_RE.match(src, self.pos).end()
                self.emit(TokenKind.REGEX, src[start:self.pos], start, line, col)
                return
            self.pos += 1
        self.fail(UNTERMINATED, "unterminated regular expression literal", start, line, col)


def tokenize(source: str, file: str = "<string>") -> list[Token]:
    """Tokenize ES5/JSC source.  Raises DiagnosticError on a lexical error.

    Comments are skipped; their positions still advance the line/column
    bookkeeping so every token span matches the file."""
    return _Scanner(source, file).scan()


def tokenize_with_comments(source: str, file: str = "<string>"):
    scanner = _Scanner(source, file)
    tokens = scanner.scan()
    return tokens, scanner.comment_spans


_ESCAPES = {
    "b": "\b", "t": "\t", "n": "\n", "v": "\v", "f": "\f", "r": "\r",
    "'": "'", '"': '"', "\\": "\\", "0": "\0",
}


def decode_string_literal(raw: str) -> str:
    """Decode an ES5 string token (quotes included) to its value."""
    out = []
    i = 1
    end = len(raw) - 1
    while i < end:
        ch = raw[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        i += 1
        esc = raw[i]
        if esc == "u":
            out.append(chr(int(raw[i + 1:i + 5], 16)))
            i += 5
        elif esc == "x":
            out.append(chr(int(raw[i + 1:i + 3], 16)))
            i += 3
        elif esc in "\n\r  ":
            if esc == "\r" and i + 1 < end and raw[i + 1] == "\n":
                i += 1
            i += 1
        else:
            out.append(_ESCAPES.get(esc, esc))
            i += 1
    return "".join(out)
