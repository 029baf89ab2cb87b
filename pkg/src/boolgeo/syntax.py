"""Terms, equations and equation systems, with a text front end.

Concrete syntax (LL(1)):

    system  := [ "vars" name {"," name} sep ] eq { sep eq }
    eq      := term "=" term
    term    := factor { ("+" | "\\/") factor }
    factor  := unary { ("*" | "&") unary }
    unary   := "!" unary | atom ["'"]
    atom    := name | "0" | "1" | "(" term ")"

``sep`` is ``;`` or a newline; runs of separators collapse.  Complement
binds tighter than meet, meet tighter than join.  Juxtaposition is not
meet (``x1x2`` is a single name).  The word ``vars`` is reserved for the
optional declaration header.  Files conventionally use the ``.beq``
extension, UTF-8 encoded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError


# --- abstract syntax ---------------------------------------------------


class Term:
    """Base class of term AST nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Const(Term):
    value: bool


@dataclass(frozen=True)
class Join(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Meet(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Complement(Term):
    term: Term


ZERO = Const(False)
ONE = Const(True)


@dataclass(frozen=True)
class Equation:
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class System:
    """An ordered variable list plus a list of equations over it.

    Declared variables may go unused by the equations; they still count
    toward the system's variable space.
    """

    variables: tuple[str, ...]
    equations: tuple[Equation, ...]

    def __post_init__(self):
        if len(self.variables) < 1:
            raise ValueError("a system needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        declared = set(self.variables)
        for eq in self.equations:
            for name in term_variables(eq.lhs) + term_variables(eq.rhs):
                if name not in declared:
                    raise ValueError(f"equation uses undeclared variable {name!r}")


def term_variables(t: Term) -> list[str]:
    """Variable names occurring in ``t``, in first-occurrence order."""
    seen: dict[str, None] = {}
    _collect_vars(t, seen)
    return list(seen)


def _collect_vars(t: Term, seen: dict[str, None]) -> None:
    if isinstance(t, Var):
        seen.setdefault(t.name, None)
    elif isinstance(t, Complement):
        _collect_vars(t.term, seen)
    elif isinstance(t, (Join, Meet)):
        _collect_vars(t.left, seen)
        _collect_vars(t.right, seen)


# --- lexer -------------------------------------------------------------

_VARS_KEYWORD = "vars"

# token kinds
_NAME, _CONST, _JOIN, _MEET, _BANG, _PRIME = "name", "const", "join", "meet", "bang", "prime"
_LPAREN, _RPAREN, _EQ, _SEP, _COMMA, _VARS, _EOF = (
    "lparen", "rparen", "eq", "sep", "comma", "vars", "eof",
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _is_name_start(c: str) -> bool:
    return c.isalpha() or c == "_"


def _is_name_char(c: str) -> bool:
    return c.isalnum() or c == "_"


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            tokens.append(_Token(_SEP, "\n", line, col))
            i += 1
            line += 1
            col = 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        start_col = col
        if c == ";":
            tokens.append(_Token(_SEP, ";", line, start_col))
        elif c == ",":
            tokens.append(_Token(_COMMA, c, line, start_col))
        elif c == "=":
            tokens.append(_Token(_EQ, c, line, start_col))
        elif c == "+":
            tokens.append(_Token(_JOIN, c, line, start_col))
        elif c == "\\":
            if i + 1 < n and text[i + 1] == "/":
                tokens.append(_Token(_JOIN, "\\/", line, start_col))
                i += 1
                col += 1
            else:
                raise ParseError("expected '/' after '\\'", line, start_col)
        elif c in "*&":
            tokens.append(_Token(_MEET, c, line, start_col))
        elif c == "!":
            tokens.append(_Token(_BANG, c, line, start_col))
        elif c == "'":
            tokens.append(_Token(_PRIME, c, line, start_col))
        elif c == "(":
            tokens.append(_Token(_LPAREN, c, line, start_col))
        elif c == ")":
            tokens.append(_Token(_RPAREN, c, line, start_col))
        elif c in "01":
            tokens.append(_Token(_CONST, c, line, start_col))
        elif _is_name_start(c):
            j = i + 1
            while j < n and _is_name_char(text[j]):
                j += 1
            word = text[i:j]
            kind = _VARS if word == _VARS_KEYWORD else _NAME
            tokens.append(_Token(kind, word, line, start_col))
            col += j - i
            i = j
            continue
        else:
            raise ParseError(f"unexpected character {c!r}", line, start_col)
        i += 1
        col += 1
    tokens.append(_Token(_EOF, "", line, col))
    return tokens


# --- parser ------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != _EOF:
            self.pos += 1
        return tok

    def fail(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.line, tok.column)

    def skip_seps(self) -> None:
        while self.peek().kind == _SEP:
            self.advance()

    def parse_system(self) -> System:
        self.skip_seps()
        declared = None
        if self.peek().kind == _VARS:
            declared = self.parse_header()
            self.skip_seps()
        equations = []
        occurrence: dict[str, None] = {}
        if self.peek().kind == _EOF:
            raise self.fail("expected an equation")
        while self.peek().kind != _EOF:
            eq = self.parse_equation()
            equations.append(eq)
            for name in term_variables(eq.lhs) + term_variables(eq.rhs):
                occurrence.setdefault(name, None)
            if self.peek().kind == _SEP:
                self.skip_seps()
            elif self.peek().kind != _EOF:
                raise self.fail(f"expected ';' or newline, got {self.peek().text!r}")
        if declared is not None:
            names = set(declared)
            for name in occurrence:
                if name not in names:
                    raise ParseError(f"undeclared variable {name!r}")
            variables = tuple(declared)
        else:
            variables = tuple(occurrence)
        if not variables:
            raise ParseError("system declares no variables and uses none")
        return System(variables, tuple(equations))

    def parse_header(self) -> list[str]:
        self.advance()  # 'vars'
        names: list[str] = []
        seen = set()
        while True:
            tok = self.peek()
            if tok.kind != _NAME:
                raise self.fail("expected a variable name in 'vars' declaration")
            if tok.text in seen:
                raise ParseError(
                    f"duplicate variable declaration {tok.text!r}", tok.line, tok.column
                )
            seen.add(tok.text)
            names.append(self.advance().text)
            if self.peek().kind == _COMMA:
                self.advance()
                continue
            break
        if self.peek().kind != _SEP:
            raise self.fail("expected ';' or newline after 'vars' declaration")
        return names

    def parse_equation(self) -> Equation:
        lhs = self.parse_term()
        if self.peek().kind != _EQ:
            raise self.fail("expected '=' in equation")
        self.advance()
        rhs = self.parse_term()
        return Equation(lhs, rhs)

    def parse_term(self) -> Term:
        t = self.parse_factor()
        while self.peek().kind == _JOIN:
            self.advance()
            t = Join(t, self.parse_factor())
        return t

    def parse_factor(self) -> Term:
        t = self.parse_unary()
        while self.peek().kind == _MEET:
            self.advance()
            t = Meet(t, self.parse_unary())
        return t

    def parse_unary(self) -> Term:
        if self.peek().kind == _BANG:
            self.advance()
            return Complement(self.parse_unary())
        t = self.parse_atom()
        if self.peek().kind == _PRIME:
            self.advance()
            return Complement(t)
        return t

    def parse_atom(self) -> Term:
        tok = self.peek()
        if tok.kind == _NAME:
            self.advance()
            return Var(tok.text)
        if tok.kind == _CONST:
            self.advance()
            return Const(tok.text == "1")
        if tok.kind == _LPAREN:
            self.advance()
            t = self.parse_term()
            if self.peek().kind != _RPAREN:
                raise self.fail("expected ')'")
            self.advance()
            return t
        if tok.kind == _VARS:
            raise self.fail("the word 'vars' is reserved")
        raise self.fail(f"expected a term, got {tok.text!r}" if tok.text else "unexpected end of input")


def parse_system(text: str) -> System:
    """Parse a whole equation system.

    Variable order is declaration order when a ``vars`` header is present,
    otherwise first-occurrence order across the equations.
    """
    return _Parser(_tokenize(text)).parse_system()


def parse_term(text: str) -> Term:
    """Parse a single term (no '=')."""
    parser = _Parser(_tokenize(text))
    parser.skip_seps()
    t = parser.parse_term()
    parser.skip_seps()
    if parser.peek().kind != _EOF:
        raise parser.fail(f"unexpected trailing input {parser.peek().text!r}")
    return t


# --- formatting --------------------------------------------------------


def format_term(t: Term) -> str:
    """Fully parenthesized canonical text; parsing it back yields ``t``."""
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return "1" if t.value else "0"
    if isinstance(t, Join):
        return f"({format_term(t.left)} + {format_term(t.right)})"
    if isinstance(t, Meet):
        return f"({format_term(t.left)} * {format_term(t.right)})"
    if isinstance(t, Complement):
        return f"!({format_term(t.term)})"
    raise TypeError(f"not a term: {t!r}")


def format_equation(eq: Equation) -> str:
    return f"{format_term(eq.lhs)} = {format_term(eq.rhs)}"


def format_system(s: System) -> str:
    """Render with an explicit ``vars`` header so round trips preserve
    variable order and unused declarations."""
    lines = ["vars " + ", ".join(s.variables) + ";"]
    lines.extend(format_equation(eq) for eq in s.equations)
    return "\n".join(lines)
