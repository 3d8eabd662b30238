"""Concrete syntax for C sources: tokenizer, tolerant parser, standardizer.

The parser maps whatever it sees onto a fixed node-kind vocabulary and
degrades to ``other`` nodes on constructs it does not understand; the only
hard failure is unbalanced bracketing.  ``render`` re-emits a deterministic,
standardized form of the program from the token stream kept on the tree root.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field

from .errors import EncodingError, ParseError

KEYWORDS = frozenset(
    """auto break case char const continue default do double else enum extern
    float for goto if inline int long register restrict return short signed
    sizeof static struct switch typedef union unsigned void volatile while
    _Bool _Complex _Imaginary""".split()
)

NODE_KINDS = frozenset(
    """translation_unit function_definition declaration compound_statement
    if_statement for_statement while_statement do_statement switch_statement
    return_statement break_statement continue_statement expression_statement
    labeled_statement call_expression binary_expression unary_expression
    assignment_expression conditional_expression cast_expression
    subscript_expression field_expression identifier literal argument_list
    parameter_list preprocessor_directive other""".split()
)

# Keywords that can open a declaration.
_DECL_KEYWORDS = frozenset(
    """auto char const double enum extern float inline int long register
    restrict short signed static struct typedef union unsigned void volatile
    _Bool _Complex _Imaginary""".split()
)

_TYPE_KEYWORDS = frozenset(
    """char double float int long short signed unsigned void struct union
    enum const volatile _Bool _Complex""".split()
)

_PUNCT3 = ("<<=", ">>=", "...")
_PUNCT2 = (
    "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "##",
)
_ASSIGN_OPS = frozenset(
    ("=", "+=", "-=", "*=", "/=", "%=", "<<=", ">>=", "&=", "|=", "^=")
)
_PREFIX_OPS = frozenset(("+", "-", "!", "~", "*", "&", "++", "--"))

# Binary operator precedence (higher binds tighter).
_BINOP_PREC = {
    "||": 1, "&&": 2, "|": 3, "^": 4, "&": 5,
    "==": 6, "!=": 6,
    "<": 7, ">": 7, "<=": 7, ">=": 7,
    "<<": 8, ">>": 8,
    "+": 9, "-": 9,
    "*": 10, "/": 10, "%": 10,
}


@dataclass(slots=True)
class Token:
    kind: str  # identifier | keyword | literal | punctuation | preprocessor
    text: str
    line: int
    col: int
    offset: int = 0


@dataclass(slots=True)
class AstNode:
    kind: str
    children: list = field(default_factory=list)
    start_line: int = 1
    end_line: int = 1
    start_byte: int = 0
    end_byte: int = 0
    leaf_text: str = ""
    # token stream of the whole unit; populated on the root only, for render
    tokens: list = field(default_factory=list, repr=False)

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass(slots=True)
class SourceUnit:
    path: str
    text: str
    parse_ok: bool = False
    ast: AstNode | None = None


def decode_source(data):
    """Decode raw bytes as UTF-8, raising EncodingError on invalid input."""
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(str(exc)) from None


# ---------------------------------------------------------------------------
# Lexer


def _pure_lex(text):
    """Reference lexer; returns (raw token tuples, inter-token trivia).

    Trivia has one more entry than the token list so that
    ``trivia[0] + tok[0] + trivia[1] + tok[1] + ...`` reproduces the input.
    """
    tokens = []
    trivia = []
    i = 0
    n = len(text)
    line = 1
    col = 1
    bol = True
    pending = []

    def advance_over(s):
        nonlocal line, col
        for ch in s:
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1

    while i < n:
        ch = text[i]
        # whitespace and comments are trivia
        if ch in " \t\r\n\v\f":
            pending.append(ch)
            if ch == "\n":
                bol = True
            advance_over(ch)
            i += 1
            continue
        if ch == "/" and i + 1 < n and text[i + 1] == "/":
            j = text.find("\n", i)
            if j < 0:
                j = n
            pending.append(text[i:j])
            advance_over(text[i:j])
            i = j
            continue
        if ch == "/" and i + 1 < n and text[i + 1] == "*":
            j = text.find("*/", i + 2)
            j = n if j < 0 else j + 2
            pending.append(text[i:j])
            advance_over(text[i:j])
            i = j
            continue
        tline, tcol, toff = line, col, i
        if ch == "#" and bol:
            # one opaque token per directive, honoring line continuations
            j = i
            while j < n:
                k = text.find("\n", j)
                if k < 0:
                    j = n
                    break
                back = k - 1
                while back >= j and text[back] in " \t\r":
                    back -= 1
                if back >= i and text[back] == "\\":
                    j = k + 1
                    continue
                j = k
                break
            lexeme = text[i:j]
            tokens.append(("preprocessor", lexeme, tline, tcol, toff))
            trivia.append("".join(pending))
            pending = []
            advance_over(lexeme)
            i = j
            bol = True
            continue
        bol = False
        if ch.isalpha() or ch == "_":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            lexeme = text[i:j]
            kind = "keyword" if lexeme in KEYWORDS else "identifier"
        elif ch.isdigit() or (ch == "." and i + 1 < n and text[i + 1].isdigit()):
            j = i + 1
            while j < n:
                c = text[j]
                if c.isalnum() or c in "._":
                    j += 1
                elif c in "+-" and text[j - 1] in "eEpP":
                    j += 1
                else:
                    break
            lexeme = text[i:j]
            kind = "literal"
        elif ch in "\"'":
            quote = ch
            j = i + 1
            while j < n:
                c = text[j]
                if c == "\\" and j + 1 < n:
                    j += 2
                    continue
                j += 1
                if c == quote or c == "\n":
                    break
            lexeme = text[i:j]
            kind = "literal"
        else:
            lexeme = None
            if i + 3 <= n and text[i:i + 3] in _PUNCT3:
                lexeme = text[i:i + 3]
            elif i + 2 <= n and text[i:i + 2] in _PUNCT2:
                lexeme = text[i:i + 2]
            else:
                lexeme = ch
            j = i + len(lexeme)
            kind = "punctuation"
        tokens.append((kind, lexeme, tline, tcol, toff))
        trivia.append("".join(pending))
        pending = []
        advance_over(lexeme)
        i = j
    trivia.append("".join(pending))
    return tokens, trivia


def _select_lexer():
    if os.environ.get("MPIASSIST_PURE"):
        return _pure_lex, False
    try:
        from . import _speedups
    except ImportError:
        return _pure_lex, False
    return _speedups.lex, True


_lex, USING_COMPILED_LEXER = _select_lexer()


def lex(text):
    """Tokenize and also return the inter-token trivia strings."""
    text = decode_source(text)
    raw, trivia = _lex(text)
    return [Token(*t) for t in raw], trivia


def tokenize(text):
    """Tokenize C source text into an ordered Token sequence."""
    return lex(text)[0]


def token_count(text):
    return len(tokenize(text))


# ---------------------------------------------------------------------------
# Parser


class _ExprError(Exception):
    pass


def _check_balance(tokens):
    pairs = {")": "(", "}": "{", "]": "["}
    stack = []
    for tok in tokens:
        t = tok.text
        if t in "([{":
            stack.append(tok)
        elif t in ")]}":
            if not stack or stack[-1].text != pairs[t]:
                raise ParseError(f"unbalanced {t!r}", tok.line, tok.col)
            stack.pop()
    if stack:
        tok = stack[-1]
        raise ParseError(f"unbalanced {tok.text!r}", tok.line, tok.col)


class _Parser:
    def __init__(self, tokens, text):
        self.toks = tokens
        self.n = len(tokens)
        self.text = text
        self.i = 0

    # -- token helpers ------------------------------------------------------

    def peek(self, ahead=0):
        j = self.i + ahead
        return self.toks[j] if j < self.n else None

    def peek_text(self, ahead=0):
        tok = self.peek(ahead)
        return tok.text if tok else ""

    def at_end(self):
        return self.i >= self.n

    def advance(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    # -- node construction --------------------------------------------------

    def node(self, kind, children, start_idx, end_idx=None):
        if end_idx is None:
            end_idx = self.i - 1
        first = self.toks[start_idx]
        last = self.toks[end_idx]
        return AstNode(
            kind=kind,
            children=children,
            start_line=first.line,
            end_line=last.line + last.text.count("\n"),
            start_byte=first.offset,
            end_byte=last.offset + len(last.text),
        )

    def leaf(self, kind, tok):
        return AstNode(
            kind=kind,
            start_line=tok.line,
            end_line=tok.line + tok.text.count("\n"),
            start_byte=tok.offset,
            end_byte=tok.offset + len(tok.text),
            leaf_text=tok.text,
        )

    def other_range(self, start_idx, end_idx, children=None):
        return self.node("other", children or [], start_idx, end_idx)

    # -- top level ----------------------------------------------------------

    def parse(self):
        children = []
        while not self.at_end():
            before = self.i
            children.append(self.external())
            if self.i == before:  # always make progress
                children.append(self.leaf("other", self.advance()))
        lines = self.text.count("\n") + 1
        root = AstNode(
            kind="translation_unit",
            children=children,
            start_line=1,
            end_line=max(lines, 1),
            start_byte=0,
            end_byte=len(self.text),
            tokens=self.toks,
        )
        return root

    def external(self):
        tok = self.peek()
        if tok.kind == "preprocessor":
            return self.leaf("preprocessor_directive", self.advance())
        # look ahead for the shape of this external declaration
        j = self.i
        pdepth = 0
        while j < self.n:
            t = self.toks[j]
            if t.kind == "preprocessor":
                break
            if t.text == "(":
                pdepth += 1
            elif t.text == ")":
                pdepth -= 1
            elif pdepth == 0 and t.text in ("{", ";", "}"):
                break
            j += 1
        if j >= self.n or self.toks[j].kind == "preprocessor":
            start = self.i
            self.i = j
            return self.other_range(start, j - 1)
        stop = self.toks[j].text
        if stop == "{":
            if j > self.i and self.toks[j - 1].text == ")":
                return self.function_definition()
            return self.braced_declaration()
        if stop == ";":
            return self.declaration()
        # stray '}' should not occur after the balance precheck
        return self.leaf("other", self.advance())

    def function_definition(self):
        start = self.i
        children = []
        while self.peek_text() != "(":
            tok = self.advance()
            if tok.kind == "identifier":
                children.append(self.leaf("identifier", tok))
            elif tok.kind == "literal":
                children.append(self.leaf("literal", tok))
        children.append(self.parameter_list())
        children.append(self.statement())
        return self.node("function_definition", children, start)

    def parameter_list(self):
        start = self.i
        self.advance()  # '('
        children = []
        depth = 1
        while not self.at_end() and depth > 0:
            tok = self.advance()
            if tok.text == "(":
                depth += 1
            elif tok.text == ")":
                depth -= 1
            elif depth >= 1 and tok.kind == "identifier":
                children.append(self.leaf("identifier", tok))
            elif depth >= 1 and tok.kind == "literal":
                children.append(self.leaf("literal", tok))
        return self.node("parameter_list", children, start)

    def braced_declaration(self):
        """struct/union/enum definitions and other brace-carrying externals."""
        start = self.i
        children = []
        while not self.at_end() and self.peek_text() != "{":
            tok = self.advance()
            if tok.kind == "identifier":
                children.append(self.leaf("identifier", tok))
            elif tok.kind == "literal":
                children.append(self.leaf("literal", tok))
        self._consume_braced(children)
        while not self.at_end() and self.peek_text() != ";":
            if self.peek().kind == "preprocessor":
                break
            tok = self.advance()
            if tok.kind == "identifier":
                children.append(self.leaf("identifier", tok))
            elif tok.kind == "literal":
                children.append(self.leaf("literal", tok))
        if self.peek_text() == ";":
            self.advance()
        return self.node("declaration", children, start)

    def _consume_braced(self, children):
        depth = 0
        while not self.at_end():
            tok = self.advance()
            if tok.text == "{":
                depth += 1
            elif tok.text == "}":
                depth -= 1
                if depth == 0:
                    return
            elif tok.kind == "identifier":
                children.append(self.leaf("identifier", tok))
            elif tok.kind == "literal":
                children.append(self.leaf("literal", tok))

    def declaration(self):
        start = self.i
        children = []
        pdepth = 0
        bdepth = 0
        while not self.at_end():
            tok = self.peek()
            if tok.kind == "preprocessor":
                break
            t = tok.text
            if t == ";" and pdepth == 0 and bdepth == 0:
                self.advance()
                break
            if t == "=" and pdepth == 0 and bdepth == 0:
                self.advance()
                children.append(self.initializer())
                continue
            if t == "{":
                self._consume_braced(children)
                continue
            if t == "}" and pdepth == 0 and bdepth == 0:
                break
            self.advance()
            if t == "(":
                pdepth += 1
            elif t == ")":
                pdepth -= 1
            elif t == "[":
                bdepth += 1
            elif t == "]":
                bdepth -= 1
            elif tok.kind == "identifier":
                children.append(self.leaf("identifier", tok))
            elif tok.kind == "literal":
                children.append(self.leaf("literal", tok))
        return self.node("declaration", children, start)

    def initializer(self):
        if self.peek_text() == "{":
            start = self.i
            self.advance()
            children = []
            while not self.at_end() and self.peek_text() != "}":
                if self.peek_text() == ",":
                    self.advance()
                    continue
                if self.peek_text() == "{":
                    children.append(self.initializer())
                    continue
                before = self.i
                try:
                    children.append(self.assignment())
                except _ExprError:
                    self.i = before
                    first = self.i
                    depth = 0
                    while not self.at_end():
                        t = self.peek_text()
                        if depth == 0 and t in (",", "}"):
                            break
                        if t in "([{":
                            depth += 1
                        elif t in ")]}":
                            depth -= 1
                        self.advance()
                    if self.i > first:
                        children.append(self.other_range(first, self.i - 1))
            if self.peek_text() == "}":
                self.advance()
            return self.node("other", children, start)
        return self.assignment()

    # -- statements ---------------------------------------------------------

    def statement(self):
        tok = self.peek()
        if tok is None:
            return None
        if tok.kind == "preprocessor":
            return self.leaf("preprocessor_directive", self.advance())
        t = tok.text
        if t == "{":
            return self.compound_statement()
        if t == "if":
            return self.if_statement()
        if t == "for":
            return self.for_statement()
        if t == "while":
            return self.while_statement()
        if t == "do":
            return self.do_statement()
        if t == "switch":
            return self.switch_statement()
        if t == "return":
            return self.return_statement()
        if t in ("break", "continue"):
            start = self.i
            self.advance()
            if self.peek_text() == ";":
                self.advance()
            return self.node(f"{t}_statement", [], start)
        if t in ("case", "default"):
            return self.labeled_statement()
        if t == "goto":
            start = self.i
            while not self.at_end() and self.peek_text() != ";":
                self.advance()
            if self.peek_text() == ";":
                self.advance()
            return self.other_range(start, self.i - 1)
        if t == ";":
            start = self.i
            self.advance()
            return self.node("expression_statement", [], start)
        if tok.kind == "identifier" and self.peek_text(1) == ":":
            start = self.i
            name = self.leaf("identifier", self.advance())
            self.advance()  # ':'
            return self.node("labeled_statement", [name], start)
        if self.starts_declaration():
            return self.declaration()
        return self.expression_statement()

    def starts_declaration(self):
        tok = self.peek()
        if tok.kind == "keyword" and tok.text in _DECL_KEYWORDS:
            return True
        if tok.kind != "identifier":
            return False
        nxt = self.peek(1)
        if nxt is None:
            return False
        if nxt.kind == "identifier":
            third = self.peek(2)
            # "a b" is a declaration unless followed by something expression-like
            return third is None or third.text in (";", "=", ",", "[", "(", ")")
        if nxt.text == "*":
            third = self.peek(2)
            fourth = self.peek(3)
            return (
                third is not None
                and third.kind == "identifier"
                and fourth is not None
                and fourth.text in (";", "=", ",", "[", ")")
            )
        return False

    def compound_statement(self):
        start = self.i
        self.advance()  # '{'
        children = []
        while not self.at_end() and self.peek_text() != "}":
            before = self.i
            stmt = self.statement()
            if stmt is not None:
                children.append(stmt)
            if self.i == before:
                children.append(self.leaf("other", self.advance()))
        if self.peek_text() == "}":
            self.advance()
        return self.node("compound_statement", children, start)

    def paren_condition(self):
        """Parse '( expr )', tolerating junk before the closing paren."""
        if self.peek_text() != "(":
            return None
        self.advance()
        cond = None
        extra = None
        before = self.i
        try:
            cond = self.expression(allow_comma=True)
        except _ExprError:
            self.i = before
        if self.peek_text() != ")":
            first = self.i
            depth = 0
            while not self.at_end():
                t = self.peek_text()
                if depth == 0 and t == ")":
                    break
                if t == "(":
                    depth += 1
                elif t == ")":
                    depth -= 1
                self.advance()
            if self.i > first:
                extra = self.other_range(first, self.i - 1)
        if self.peek_text() == ")":
            self.advance()
        return cond if extra is None else (cond, extra)

    @staticmethod
    def _cond_children(result):
        if result is None:
            return []
        if isinstance(result, tuple):
            return [c for c in result if c is not None]
        return [result]

    def if_statement(self):
        start = self.i
        self.advance()  # 'if'
        children = self._cond_children(self.paren_condition())
        body = self.statement()
        if body is not None:
            children.append(body)
        if self.peek_text() == "else":
            self.advance()
            alt = self.statement()
            if alt is not None:
                children.append(alt)
        return self.node("if_statement", children, start)

    def while_statement(self):
        start = self.i
        self.advance()
        children = self._cond_children(self.paren_condition())
        body = self.statement()
        if body is not None:
            children.append(body)
        return self.node("while_statement", children, start)

    def switch_statement(self):
        start = self.i
        self.advance()
        children = self._cond_children(self.paren_condition())
        body = self.statement()
        if body is not None:
            children.append(body)
        return self.node("switch_statement", children, start)

    def do_statement(self):
        start = self.i
        self.advance()  # 'do'
        children = []
        body = self.statement()
        if body is not None:
            children.append(body)
        if self.peek_text() == "while":
            self.advance()
            children.extend(self._cond_children(self.paren_condition()))
        if self.peek_text() == ";":
            self.advance()
        return self.node("do_statement", children, start)

    def for_statement(self):
        start = self.i
        self.advance()  # 'for'
        children = []
        if self.peek_text() == "(":
            self.advance()
            # init clause
            if self.peek_text() == ";":
                self.advance()
            elif self.starts_declaration():
                children.append(self.declaration())
            else:
                self._for_clause(children, stop=";")
            # condition clause
            if self.peek_text() == ";":
                self.advance()
            else:
                self._for_clause(children, stop=";")
            # step clause, runs to the closing paren
            if self.peek_text() != ")":
                self._for_clause(children, stop=")")
            if self.peek_text() == ")":
                self.advance()
        body = self.statement()
        if body is not None:
            children.append(body)
        return self.node("for_statement", children, start)

    def _for_clause(self, children, stop):
        before = self.i
        try:
            children.append(self.expression(allow_comma=True))
        except _ExprError:
            self.i = before
        if self.peek_text() != stop:
            first = self.i
            depth = 0
            while not self.at_end():
                t = self.peek_text()
                if depth == 0 and t == stop:
                    break
                if t == "(":
                    depth += 1
                elif t == ")":
                    if depth == 0:
                        break
                    depth -= 1
                self.advance()
            if self.i > first:
                children.append(self.other_range(first, self.i - 1))
        if self.peek_text() == stop and stop == ";":
            self.advance()

    def return_statement(self):
        start = self.i
        self.advance()
        children = []
        if self.peek_text() != ";":
            before = self.i
            try:
                children.append(self.expression(allow_comma=True))
            except _ExprError:
                self.i = before
            if self.peek_text() != ";":
                first = self.i
                while not self.at_end() and self.peek_text() not in (";", "}"):
                    self.advance()
                if self.i > first:
                    children.append(self.other_range(first, self.i - 1))
        if self.peek_text() == ";":
            self.advance()
        return self.node("return_statement", children, start)

    def labeled_statement(self):
        start = self.i
        kw = self.advance()  # 'case' or 'default'
        children = []
        if kw.text == "case" and self.peek_text() != ":":
            before = self.i
            try:
                children.append(self.conditional())
            except _ExprError:
                self.i = before
                while not self.at_end() and self.peek_text() not in (":", ";", "}"):
                    self.advance()
        if self.peek_text() == ":":
            self.advance()
        return self.node("labeled_statement", children, start)

    def expression_statement(self):
        start = self.i
        try:
            expr = self.expression(allow_comma=True)
            children = [expr]
        except _ExprError:
            self.i = start
            children = None
        if children is not None and self.peek_text() == ";":
            self.advance()
            return self.node("expression_statement", children, start)
        # resync: swallow the statement as an opaque node
        self.i = start
        depth = 0
        while not self.at_end():
            t = self.peek_text()
            if depth == 0 and t == ";":
                self.advance()
                break
            if depth == 0 and t == "}":
                break
            if self.peek().kind == "preprocessor":
                break
            if t in "([{":
                depth += 1
            elif t in ")]}":
                depth -= 1
            self.advance()
        if self.i == start:
            self.advance()
        return self.other_range(start, self.i - 1)

    # -- expressions --------------------------------------------------------

    def expression(self, allow_comma):
        start = self.i
        expr = self.assignment()
        while allow_comma and self.peek_text() == ",":
            self.advance()
            rhs = self.assignment()
            expr = self.node("binary_expression", [expr, rhs], start)
        return expr

    def assignment(self):
        start = self.i
        lhs = self.conditional()
        if self.peek_text() in _ASSIGN_OPS:
            self.advance()
            rhs = self.assignment()
            return self.node("assignment_expression", [lhs, rhs], start)
        return lhs

    def conditional(self):
        start = self.i
        cond = self.binary(1)
        if self.peek_text() == "?":
            self.advance()
            then = self.expression(allow_comma=False)
            if self.peek_text() == ":":
                self.advance()
            alt = self.conditional()
            return self.node("conditional_expression", [cond, then, alt], start)
        return cond

    def binary(self, min_prec):
        start = self.i
        lhs = self.unary()
        while True:
            op = self.peek_text()
            prec = _BINOP_PREC.get(op, 0)
            if prec < min_prec:
                return lhs
            self.advance()
            rhs = self.binary(prec + 1)
            lhs = self.node("binary_expression", [lhs, rhs], start)

    def unary(self):
        tok = self.peek()
        if tok is None:
            raise _ExprError()
        start = self.i
        if tok.text in _PREFIX_OPS:
            self.advance()
            operand = self.unary()
            return self.node("unary_expression", [operand], start)
        if tok.text == "sizeof":
            self.advance()
            children = []
            if self.peek_text() == "(":
                self.advance()
                depth = 1
                while not self.at_end() and depth > 0:
                    t = self.advance()
                    if t.text == "(":
                        depth += 1
                    elif t.text == ")":
                        depth -= 1
                    elif t.kind == "identifier":
                        children.append(self.leaf("identifier", t))
                    elif t.kind == "literal":
                        children.append(self.leaf("literal", t))
            else:
                children.append(self.unary())
            return self.node("unary_expression", children, start)
        return self.postfix()

    def postfix(self):
        expr = self.primary()
        while True:
            t = self.peek_text()
            if t == "(":
                args = self.argument_list()
                expr = AstNode(
                    kind="call_expression",
                    children=[expr, args],
                    start_line=expr.start_line,
                    end_line=args.end_line,
                    start_byte=expr.start_byte,
                    end_byte=args.end_byte,
                )
            elif t == "[":
                self.advance()
                idx = None
                if self.peek_text() != "]":
                    try:
                        idx = self.expression(allow_comma=True)
                    except _ExprError:
                        while not self.at_end() and self.peek_text() != "]":
                            self.advance()
                close = self.peek()
                if self.peek_text() == "]":
                    self.advance()
                children = [expr] + ([idx] if idx is not None else [])
                expr = AstNode(
                    kind="subscript_expression",
                    children=children,
                    start_line=expr.start_line,
                    end_line=close.line if close else expr.end_line,
                    start_byte=expr.start_byte,
                    end_byte=(close.offset + 1) if close else expr.end_byte,
                )
            elif t in (".", "->"):
                self.advance()
                children = [expr]
                end_line, end_byte = expr.end_line, expr.end_byte
                if self.peek() is not None and self.peek().kind == "identifier":
                    name = self.leaf("identifier", self.advance())
                    children.append(name)
                    end_line, end_byte = name.end_line, name.end_byte
                expr = AstNode(
                    kind="field_expression",
                    children=children,
                    start_line=expr.start_line,
                    end_line=end_line,
                    start_byte=expr.start_byte,
                    end_byte=end_byte,
                )
            elif t in ("++", "--"):
                tok = self.advance()
                expr = AstNode(
                    kind="unary_expression",
                    children=[expr],
                    start_line=expr.start_line,
                    end_line=tok.line,
                    start_byte=expr.start_byte,
                    end_byte=tok.offset + len(tok.text),
                )
            else:
                return expr

    def argument_list(self):
        start = self.i
        self.advance()  # '('
        children = []
        while not self.at_end() and self.peek_text() != ")":
            if self.peek_text() == ",":
                self.advance()
                continue
            before = self.i
            try:
                children.append(self.assignment())
            except _ExprError:
                self.i = before
                first = self.i
                depth = 0
                while not self.at_end():
                    t = self.peek_text()
                    if depth == 0 and t in (",", ")"):
                        break
                    if t == "(":
                        depth += 1
                    elif t == ")":
                        depth -= 1
                    self.advance()
                if self.i > first:
                    children.append(self.other_range(first, self.i - 1))
        if self.peek_text() == ")":
            self.advance()
        return self.node("argument_list", children, start)

    def primary(self):
        tok = self.peek()
        if tok is None:
            raise _ExprError()
        if tok.kind == "identifier":
            return self.leaf("identifier", self.advance())
        if tok.kind == "literal":
            leaf = self.leaf("literal", self.advance())
            # adjacent string literals concatenate into one node
            while (
                self.peek() is not None
                and self.peek().kind == "literal"
                and self.peek().text[:1] == '"'
                and leaf.leaf_text[:1] == '"'
            ):
                nxt = self.advance()
                leaf.leaf_text = leaf.leaf_text + " " + nxt.text
                leaf.end_line = nxt.line
                leaf.end_byte = nxt.offset + len(nxt.text)
            return leaf
        if tok.text == "(":
            if self._looks_like_cast():
                return self.cast_expression()
            self.advance()
            expr = self.expression(allow_comma=True)
            if self.peek_text() != ")":
                while not self.at_end() and self.peek_text() != ")":
                    self.advance()
            if self.peek_text() == ")":
                self.advance()
            return expr
        raise _ExprError()

    def _looks_like_cast(self):
        j = self.i + 1
        depth = 1
        saw_type = False
        while j < self.n and depth > 0:
            t = self.toks[j]
            if t.text == "(":
                depth += 1
            elif t.text == ")":
                depth -= 1
                if depth == 0:
                    break
            elif t.kind == "keyword" and t.text in _TYPE_KEYWORDS:
                saw_type = True
            elif t.kind == "identifier" or t.text in ("*", "[", "]"):
                pass
            else:
                return False
            j += 1
        if not saw_type or j >= self.n:
            return False
        nxt = self.toks[j + 1] if j + 1 < self.n else None
        if nxt is None:
            return False
        return (
            nxt.kind in ("identifier", "literal")
            or nxt.text in ("(",) or nxt.text in _PREFIX_OPS
            or nxt.text == "sizeof"
        )

    def cast_expression(self):
        start = self.i
        self.advance()  # '('
        children = []
        depth = 1
        while not self.at_end() and depth > 0:
            tok = self.advance()
            if tok.text == "(":
                depth += 1
            elif tok.text == ")":
                depth -= 1
            elif tok.kind == "identifier":
                children.append(self.leaf("identifier", tok))
        children.append(self.unary())
        return self.node("cast_expression", children, start)


def parse(text):
    """Parse C source into a translation_unit tree.

    Unknown constructs become ``other`` nodes; unbalanced braces, parens or
    brackets raise ParseError.
    """
    text = decode_source(text)
    tokens = tokenize(text)
    _check_balance(tokens)
    return _Parser(tokens, text).parse()


def parse_unit(path, text):
    """Build a SourceUnit, recording parse failure instead of raising."""
    unit = SourceUnit(path=str(path), text=text)
    try:
        unit.ast = parse(text)
        unit.parse_ok = True
    except (ParseError, EncodingError):
        unit.parse_ok = False
    return unit


# ---------------------------------------------------------------------------
# Renderer

_HANG_KEYWORDS = ("if", "for", "while", "switch")


def _is_binary_context(prev, prev_was_prefix):
    if prev is None or prev_was_prefix:
        return False
    if prev.kind in ("identifier", "literal"):
        return True
    return prev.text in (")", "]", "++", "--")


def _space_before(prev, tok, prev_was_prefix):
    """Whether a single space separates tok from the previous token."""
    t = tok.text
    p = prev.text
    if p in ("(", "[", "{"):
        return False
    if prev_was_prefix:
        return False
    if t in (",", ";", ")", "]"):
        return False
    if t == "[":
        return False
    if t in (".", "->") or p in (".", "->"):
        return False
    if t == "(":
        if prev.kind == "identifier" or p in (")", "]"):
            return False
        return True
    if t in ("++", "--") and _is_binary_context(prev, prev_was_prefix):
        return False  # postfix
    if p in ("++", "--") and prev.kind == "punctuation":
        # previous was postfix inc/dec; treat like an operand boundary
        return True
    return True


def render(ast):
    """Deterministically re-emit standardized source text from a parse tree."""
    if ast.kind != "translation_unit":
        raise ValueError("render expects a translation_unit root")
    tokens = [t for t in ast.tokens]
    lines = []
    cur = []  # parts of the current line
    indent = 0
    hang = 0
    pdepth = 0
    brace_styles = []
    hang_marks = []  # (keyword, pdepth at keyword)
    prev = None
    prev_was_prefix = False
    line_first = None

    def flush(reset_hang=True):
        nonlocal cur, prev, prev_was_prefix, line_first, hang
        if cur:
            lines.append("    " * (indent + hang) + "".join(cur).rstrip())
        cur = []
        prev = None
        prev_was_prefix = False
        line_first = None
        if reset_hang:
            hang = 0

    def emit(text):
        nonlocal line_first
        if line_first is None and text != " ":
            line_first = text
        cur.append(text)

    i = 0
    n = len(tokens)
    while i < n:
        tok = tokens[i]
        t = tok.text
        if tok.kind == "preprocessor":
            flush()
            # normalize internal continuation whitespace minimally: keep raw
            lines.append(t.strip())
            i += 1
            continue
        if t == "{":
            init_style = prev is not None and prev.text in ("=", ",", "(", "{")
            if init_style:
                brace_styles.append(("init", 0))
                if prev is not None and _space_before(prev, tok, prev_was_prefix):
                    emit(" ")
                emit("{")
                prev = tok
                prev_was_prefix = False
                i += 1
                continue
            absorbed = hang
            brace_styles.append(("block", absorbed))
            flush()
            lines.append("    " * (indent + absorbed) + "{")
            indent += absorbed + 1
            i += 1
            continue
        if t == "}":
            style, absorbed = brace_styles.pop() if brace_styles else ("block", 0)
            if style == "init":
                emit("}")
                prev = tok
                prev_was_prefix = False
                i += 1
                continue
            flush()
            indent = max(indent - 1 - absorbed, 0)
            closer = "}"
            # glue a following ';' (struct defs, compound externals)
            if i + 1 < n and tokens[i + 1].text == ";" and pdepth == 0:
                closer = "};"
                i += 1
            lines.append("    " * indent + closer)
            i += 1
            continue
        if t == ";" and pdepth == 0:
            emit(";")
            flush()
            i += 1
            continue
        if t == ":" and pdepth == 0 and line_first in ("case", "default"):
            emit(":")
            flush()
            i += 1
            continue
        if (
            t == ":"
            and pdepth == 0
            and prev is not None
            and prev.kind == "identifier"
            and line_first == prev.text
            and len(cur) == 1
        ):
            emit(":")  # goto label
            flush()
            i += 1
            continue
        # ordinary token
        if cur and prev is not None and _space_before(prev, tok, prev_was_prefix):
            emit(" ")
        emit(t)
        if tok.kind == "keyword" and t in _HANG_KEYWORDS:
            hang_marks.append(pdepth)
        if t == "(":
            pdepth += 1
        elif t == ")":
            pdepth -= 1
            if hang_marks and pdepth == hang_marks[-1]:
                hang_marks.pop()
                nxt = tokens[i + 1] if i + 1 < n else None
                if nxt is not None and nxt.text not in ("{", ";") and nxt.kind != "preprocessor":
                    flush(reset_hang=False)
                    hang += 1
        elif t in ("else", "do") and tok.kind == "keyword":
            nxt = tokens[i + 1] if i + 1 < n else None
            if (
                nxt is not None
                and nxt.text not in ("{", ";")
                and not (t == "else" and nxt.text == "if")
                and nxt.kind != "preprocessor"
            ):
                flush(reset_hang=False)
                hang += 1
        # prefix/binary disambiguation for the next token
        if t in ("+", "-", "*", "&", "!", "~", "++", "--") and not _is_binary_context(
            prev, prev_was_prefix
        ):
            prev_was_prefix = True
        else:
            prev_was_prefix = False
        prev = tok
        i += 1
    flush()
    out = "\n".join(line for line in lines if line.strip() != "")
    return out + "\n" if out else ""


def standardize(text):
    """Parse then render: the canonical form used across the toolkit."""
    return render(parse(text))
