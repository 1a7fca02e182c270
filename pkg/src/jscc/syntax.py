"""Parser for `.jsc` source units: one package declaration followed by one
class or protocol declaration."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import jsast as J
from .diagnostics import (
    BAD_PROTOCOL_FLAG,
    DUPLICATE_CTOR,
    DUPLICATE_MEMBER,
    TRAILING_GARBAGE,
    UNIT_SYNTAX,
    Diagnostic,
    DiagnosticError,
    Span,
    error,
)
from .es5 import parse_expression_tokens, parse_function_expression
from .lexer import Token, TokenKind, decode_string_literal, is_identifier, tokenize


@dataclass(frozen=True)
class PackagePath:
    segments: tuple[str, ...]

    @property
    def canonical(self) -> str:
        return ".".join(self.segments)

    def __str__(self) -> str:
        return self.canonical


@dataclass
class SlotSpec:
    name: str
    getter_name: str
    setter_name: str
    default_text: str | None
    default_ast: object
    span: Span = field(compare=False)


@dataclass
class MethodDecl:
    name: str
    params: list[str]
    body: J.FunctionExpr
    body_text: str
    is_static: bool
    span: Span = field(compare=False)


@dataclass
class ClassDecl:
    package: PackagePath
    name: str
    supers: list[tuple[str, Span]]
    slots: list[SlotSpec]
    methods: list[MethodDecl]
    statics: list[MethodDecl]
    ctor: MethodDecl | None
    span: Span

    kind = "class"

    @property
    def canonical(self) -> str:
        return f"{self.package.canonical}.{self.name}"


@dataclass
class ProtocolDecl:
    package: PackagePath
    name: str
    supers: list[tuple[str, Span]]
    requirements: list[tuple[str, bool, Span]]
    span: Span

    kind = "protocol"

    @property
    def canonical(self) -> str:
        return f"{self.package.canonical}.{self.name}"


@dataclass
class SourceUnit:
    file_path: str
    package: PackagePath
    decl: ClassDecl | ProtocolDecl
    # Directory of the file relative to its build root, when known; used by
    # the pool to check that the path matches the package.
    rel_dir: tuple[str, ...] | None = None

    @property
    def canonical(self) -> str:
        return self.decl.canonical


def capitalized_slot_name(slot_name: str) -> str:
    i = 0
    while i < len(slot_name) and slot_name[i] in "_$":
        i += 1
    if i < len(slot_name) and "a" <= slot_name[i] <= "z":
        return slot_name[:i] + slot_name[i].upper() + slot_name[i + 1:]
    return slot_name


def derive_accessor_names(slot_name: str) -> tuple[str, str]:
    """Default accessor pair for a slot: `height` -> (getHeight, setHeight).

    Leading `_`/`$` are kept and the first letter after them is upcased."""
    cap = capitalized_slot_name(slot_name)
    return "get" + cap, "set" + cap


# Names a static may not shadow: the meta-class methods plus the meta
# fields the runtime stores state in.
RESERVED_META_NAMES = frozenset(
    (
        "create", "init", "classInit", "name", "respondsTo",
        "spec", "prototypeObject", "initialized",
        "_initializing", "_effective", "_staticNames",
    )
)


class UnitParser:
    def __init__(self, source: str, file_path: str):
        self.src = source
        self.file = file_path
        self.toks = tokenize(source, file_path)
        self.i = 0
        self.diags: list[Diagnostic] = []

    @property
    def cur(self) -> Token:
        return self.toks[self.i]

    def span_of(self, tok: Token) -> Span:
        return tok.span(self.file)

    def span_between(self, start: Token, end: Token) -> Span:
        return Span(self.file, start.line, start.col, end.end_line, end.end_col)

    def fail(self, message: str, tok: Token | None = None, code: str = UNIT_SYNTAX):
        tok = tok or self.cur
        raise DiagnosticError(self.diags + [error(code, message, self.span_of(tok))])

    def note(self, code: str, message: str, tok_span: Span, notes=()):
        self.diags.append(error(code, message, tok_span, notes))

    def at_word(self, word: str) -> bool:
        tok = self.cur
        return tok.value == word and tok.kind in (TokenKind.NAME, TokenKind.KEYWORD)

    def eat_word(self, word: str) -> bool:
        if self.at_word(word):
            self.i += 1
            return True
        return False

    def expect_word(self, word: str) -> Token:
        if not self.at_word(word):
            self.fail(f"expected {word!r} but found {self.cur.value or 'end of file'!r}")
        tok = self.cur
        self.i += 1
        return tok

    def expect_punct(self, value: str) -> Token:
        tok = self.cur
        if tok.kind is not TokenKind.PUNCT or tok.value != value:
            self.fail(f"expected {value!r} but found {tok.value or 'end of file'!r}")
        self.i += 1
        return tok

    def identifier(self) -> Token:
        tok = self.cur
        if tok.kind is not TokenKind.NAME:
            self.fail(f"expected identifier but found {tok.value or 'end of file'!r}")
        self.i += 1
        return tok

    # -- grammar ---------------------------------------------------------

    def parse_unit(self) -> SourceUnit:
        package = self.package_declaration()
        if self.at_word("class"):
            decl = self.class_declaration(package)
        elif self.at_word("protocol"):
            decl = self.protocol_declaration(package)
        else:
            self.fail(
                f"expected 'class' or 'protocol' but found {self.cur.value or 'end of file'!r}"
            )
        if self.cur.kind is not TokenKind.EOF:
            self.note(
                TRAILING_GARBAGE,
                f"unexpected {self.cur.value!r} after the {decl.kind} declaration",
                self.span_of(self.cur),
            )
        if self.diags:
            raise DiagnosticError(self.diags)
        return SourceUnit(self.file, package, decl)

    def package_declaration(self) -> PackagePath:
        self.expect_word("package")
        segments = [self.identifier().value]
        while self.cur.kind is TokenKind.PUNCT and self.cur.value == ".":
            self.i += 1
            segments.append(self.identifier().value)
        self.expect_punct(";")
        return PackagePath(tuple(segments))

    def dotted_name(self) -> tuple[str, Span]:
        first = self.identifier()
        last = first
        parts = [first.value]
        while self.cur.kind is TokenKind.PUNCT and self.cur.value == ".":
            self.i += 1
            last = self.identifier()
            parts.append(last.value)
        return ".".join(parts), self.span_between(first, last)

    def supers_clause(self) -> list[tuple[str, Span]]:
        supers: list[tuple[str, Span]] = []
        if self.eat_word("extends"):
            supers.append(self.dotted_name())
            while self.cur.kind is TokenKind.PUNCT and self.cur.value == ",":
                self.i += 1
                supers.append(self.dotted_name())
        return supers

    def class_declaration(self, package: PackagePath) -> ClassDecl:
        start = self.expect_word("class")
        name_tok = self.identifier()
        supers = self.supers_clause()
        self.expect_punct("{")
        slots: list[SlotSpec] = []
        methods: list[MethodDecl] = []
        statics: list[MethodDecl] = []
        ctor: MethodDecl | None = None

        while not (self.cur.kind is TokenKind.PUNCT and self.cur.value == "}"):
            member_tok = self.identifier()
            self.expect_punct(":")
            if member_tok.value == "slots":
                self.slot_list(slots)
            elif member_tok.value == "static":
                self.static_block(statics)
            else:
                method = self.method_member(member_tok, is_static=False)
                if method.name == name_tok.value:
                    if ctor is not None:
                        self.note(
                            DUPLICATE_CTOR,
                            f"class {name_tok.value!r} declares more than one constructor",
                            method.span,
                            notes=[("first constructor is here", ctor.span)],
                        )
                    else:
                        ctor = method
                else:
                    self.check_duplicate(methods, method)
                    methods.append(method)
            if not (self.cur.kind is TokenKind.PUNCT and self.cur.value == ","):
                break
            self.i += 1
        close = self.expect_punct("}")

        for slot in slots:
            if slot.getter_name == slot.setter_name:
                self.note(
                    UNIT_SYNTAX,
                    f"slot {slot.name!r} uses the same name for getter and setter",
                    slot.span,
                )
        return ClassDecl(
            package,
            name_tok.value,
            supers,
            slots,
            methods,
            statics,
            ctor,
            self.span_between(start, close),
        )

    def check_duplicate(self, existing: list[MethodDecl], method: MethodDecl):
        for other in existing:
            if other.name == method.name:
                self.note(
                    DUPLICATE_MEMBER,
                    f"duplicate method {method.name!r}",
                    method.span,
                    notes=[("first declared here", other.span)],
                )
                return

    def method_member(self, name_tok: Token, is_static: bool) -> MethodDecl:
        if not self.at_word("function"):
            self.fail(
                f"member {name_tok.value!r} must be a function expression",
            )
        func, self.i = parse_function_expression(self.toks, self.i, self.file)
        body_text = self.src[func.start:func.end]
        end = self.toks[self.i - 1]
        return MethodDecl(
            name_tok.value,
            list(func.params),
            func,
            body_text,
            is_static,
            self.span_between(name_tok, end),
        )

    def static_block(self, statics: list[MethodDecl]):
        self.expect_punct("{")
        while not (self.cur.kind is TokenKind.PUNCT and self.cur.value == "}"):
            name_tok = self.identifier()
            self.expect_punct(":")
            method = self.method_member(name_tok, is_static=True)
            self.check_duplicate(statics, method)
            statics.append(method)
            if not (self.cur.kind is TokenKind.PUNCT and self.cur.value == ","):
                break
            self.i += 1
        self.expect_punct("}")

    def slot_list(self, slots: list[SlotSpec]):
        tok = self.cur
        if tok.kind is TokenKind.PUNCT and tok.value == "[":
            self.shorthand_slots(slots)
        elif tok.kind is TokenKind.PUNCT and tok.value == "{":
            self.extended_slots(slots)
        else:
            self.fail(f"expected '[' or '{{' after 'slots:' but found {tok.value!r}")

    def add_slot(self, slot: SlotSpec, slots: list[SlotSpec]):
        for other in slots:
            if other.name == slot.name:
                self.note(
                    DUPLICATE_MEMBER,
                    f"duplicate slot {slot.name!r}",
                    slot.span,
                    notes=[("first declared here", other.span)],
                )
                return
        slots.append(slot)

    def shorthand_slots(self, slots: list[SlotSpec]):
        self.expect_punct("[")
        while not (self.cur.kind is TokenKind.PUNCT and self.cur.value == "]"):
            name_tok = self.identifier()
            getter, setter = derive_accessor_names(name_tok.value)
            self.add_slot(
                SlotSpec(name_tok.value, getter, setter, None, None, self.span_of(name_tok)),
                slots,
            )
            if not (self.cur.kind is TokenKind.PUNCT and self.cur.value == ","):
                break
            self.i += 1
        self.expect_punct("]")

    def extended_slots(self, slots: list[SlotSpec]):
        self.expect_punct("{")
        while not (self.cur.kind is TokenKind.PUNCT and self.cur.value == "}"):
            name_tok = self.identifier()
            self.expect_punct(":")
            slot = self.extended_slot_spec(name_tok)
            self.add_slot(slot, slots)
            if not (self.cur.kind is TokenKind.PUNCT and self.cur.value == ","):
                break
            self.i += 1
        self.expect_punct("}")

    def extended_slot_spec(self, name_tok: Token) -> SlotSpec:
        self.expect_punct("{")
        getter, setter = derive_accessor_names(name_tok.value)
        default_text = None
        default_ast = None
        end = self.cur
        while not (self.cur.kind is TokenKind.PUNCT and self.cur.value == "}"):
            key_tok = self.cur
            # `default` lexes as a keyword, `getter`/`setter` as names
            if key_tok.kind not in (TokenKind.NAME, TokenKind.KEYWORD) or (
                key_tok.value not in ("getter", "setter", "default")
            ):
                self.fail(
                    f"expected 'getter', 'setter' or 'default' but found {key_tok.value!r}"
                )
            self.i += 1
            self.expect_punct(":")
            if key_tok.value == "default":
                first = self.cur
                default_ast, self.i = parse_expression_tokens(self.toks, self.i, self.file)
                default_text = self.src[first.start:self.toks[self.i - 1].end]
            else:
                value_tok = self.cur
                if value_tok.kind is not TokenKind.STRING:
                    self.fail(
                        f"{key_tok.value!r} of slot {name_tok.value!r} must be a string literal"
                    )
                self.i += 1
                accessor = decode_string_literal(value_tok.value)
                if not is_identifier(accessor):
                    self.fail(
                        f"{key_tok.value!r} of slot {name_tok.value!r} is not a valid identifier",
                        value_tok,
                    )
                if key_tok.value == "getter":
                    getter = accessor
                else:
                    setter = accessor
            end = self.toks[self.i - 1]
            if not (self.cur.kind is TokenKind.PUNCT and self.cur.value == ","):
                break
            self.i += 1
        close = self.expect_punct("}")
        return SlotSpec(
            name_tok.value,
            getter,
            setter,
            default_text,
            default_ast,
            self.span_between(name_tok, close),
        )

    def protocol_declaration(self, package: PackagePath) -> ProtocolDecl:
        start = self.expect_word("protocol")
        name_tok = self.identifier()
        supers = self.supers_clause()
        self.expect_punct("{")
        requirements: list[tuple[str, bool, Span]] = []
        while not (self.cur.kind is TokenKind.PUNCT and self.cur.value == "}"):
            member_tok = self.identifier()
            self.expect_punct(":")
            flag_tok = self.cur
            if flag_tok.kind is TokenKind.KEYWORD and flag_tok.value in ("true", "false"):
                self.i += 1
                req_span = self.span_between(member_tok, flag_tok)
                if any(name == member_tok.value for name, _, _ in requirements):
                    self.note(
                        DUPLICATE_MEMBER,
                        f"duplicate protocol requirement {member_tok.value!r}",
                        req_span,
                    )
                else:
                    requirements.append((member_tok.value, flag_tok.value == "true", req_span))
            else:
                self.note(
                    BAD_PROTOCOL_FLAG,
                    f"protocol member {member_tok.value!r} must be declared 'true' or 'false'",
                    self.span_of(flag_tok),
                )
                self.i += 1
            if not (self.cur.kind is TokenKind.PUNCT and self.cur.value == ","):
                break
            self.i += 1
        close = self.expect_punct("}")
        return ProtocolDecl(
            package,
            name_tok.value,
            supers,
            requirements,
            self.span_between(start, close),
        )


def parse_unit(source: str, file_path: str) -> SourceUnit:
    """Parse one `.jsc` file.  Raises DiagnosticError listing every problem
    found (syntax failures abort at the first one)."""
    return UnitParser(source, file_path).parse_unit()
