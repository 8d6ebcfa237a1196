"""Graph expression language: tokenizer, recursive-descent parser, printer

Grammar (whitespace-insensitive, product is left-associative):

    expr  := term ("x" term)*
    term  := P(int) | C(int) | K(int) | Theta(int {, int})
           | join(expr, expr [, edges]) | power(expr, int)
           | edit(expr [; add=edges] [; del=edges]) | file(path) | (expr)
    edges := (int, int) {, (int, int)}

Vertex numbers inside edge lists are 1-based.
"""

import re
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple, Union

from src.errors import PreconditionError

FAMILIES = ("P", "C", "K", "Theta")
EdgeSpec = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class Location:
    line: int
    column: int

    def __str__(self) -> str:
        return f"line {self.line}, column {self.column}"


class ExprSyntaxError(PreconditionError):
    """Malformed expression text"""

    def __init__(self, message: str, location: Location, expected: Iterable[str] = ()):
        self.line = location.line
        self.column = location.column
        self.expected = frozenset(expected)
        if self.expected:
            message = f"{message}; expected one of {', '.join(sorted(self.expected))}"
        super().__init__(f"{location}: {message}")


@dataclass(frozen=True)
class FamilyAtom:
    family: str
    params: Tuple[int, ...]
    location: Optional[Location] = field(default=None, compare=False)


@dataclass(frozen=True)
class Product:
    left: "GraphExpr"
    right: "GraphExpr"
    location: Optional[Location] = field(default=None, compare=False)


@dataclass(frozen=True)
class Join:
    left: "GraphExpr"
    right: "GraphExpr"
    cross_edges: Optional[EdgeSpec] = None
    location: Optional[Location] = field(default=None, compare=False)


@dataclass(frozen=True)
class Power:
    expr: "GraphExpr"
    r: int
    location: Optional[Location] = field(default=None, compare=False)


@dataclass(frozen=True)
class Edit:
    expr: "GraphExpr"
    adds: EdgeSpec = ()
    deletes: EdgeSpec = ()
    location: Optional[Location] = field(default=None, compare=False)


@dataclass(frozen=True)
class FileRef:
    path: str
    location: Optional[Location] = field(default=None, compare=False)


GraphExpr = Union[FamilyAtom, Product, Join, Power, Edit, FileRef]


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    location: Location


_TOKEN_PATTERN = re.compile(
    r"(?P<file>file\s*\((?P<path>[^)]*)\))"
    r"|(?P<int>\d+)"
    r"|(?P<name>Theta|join|power|edit|add|del|P|C|K|x)"
    r"|(?P<punct>[(),;=])"
    r"|(?P<space>\s+)"
)


def tokenize(text: str) -> List[Token]:
    """Split text into tokens; an "end" token closes the list"""
    tokens = []
    position, line, line_start = 0, 1, 0
    while position < len(text):
        location = Location(line, position - line_start + 1)
        match = _TOKEN_PATTERN.match(text, position)
        if match is None:
            raise ExprSyntaxError(f"unexpected character {text[position]!r}", location)
        kind = match.lastgroup
        if match.group("file") is not None:
            tokens.append(Token("file", match.group("path").strip(), location))
        elif kind != "space":
            tokens.append(Token(kind, match.group(kind), location))
        consumed = match.group(0)
        newlines = consumed.count("\n")
        if newlines:
            line += newlines
            line_start = position + consumed.rindex("\n") + 1
        position = match.end()
    tokens.append(Token("end", "", Location(line, position - line_start + 1)))
    return tokens


class Parser:
    """One-token-lookahead recursive descent over tokenize() output"""

    TERM_STARTS = frozenset(FAMILIES) | {"join", "power", "edit", "file", "("}

    def __init__(self, text: str):
        self._tokens = tokenize(text)
        self._index = 0

    @property
    def _current(self) -> Token:
        return self._tokens[self._index]

    def _advance(self) -> Token:
        token = self._current
        self._index += 1
        return token

    def _at(self, text: str) -> bool:
        return self._current.kind in ("punct", "name") and self._current.text == text

    def _consume(self, expected: str) -> Token:
        token = self._current
        if not self._at(expected):
            self._fail(token, {expected})
        return self._advance()

    @staticmethod
    def _fail(token: Token, expected: Iterable[str]):
        found = "end of input" if token.kind == "end" else repr(token.text)
        raise ExprSyntaxError(f"unexpected {found}", token.location, expected)

    def _int(self) -> int:
        token = self._current
        if token.kind != "int":
            self._fail(token, {"integer"})
        self._advance()
        return int(token.text)

    def parse(self) -> GraphExpr:
        expr = self._expression()
        if self._current.kind != "end":
            self._fail(self._current, {"x", "end of input"})
        return expr

    def _expression(self) -> GraphExpr:
        left = self._term()
        while self._at("x"):
            location = self._advance().location
            left = Product(left, self._term(), location)
        return left

    def _term(self) -> GraphExpr:
        token = self._current
        if token.kind == "file":
            self._advance()
            return FileRef(token.text, token.location)
        if self._at("("):
            self._advance()
            expr = self._expression()
            self._consume(")")
            return expr
        if token.kind != "name" or token.text not in self.TERM_STARTS:
            self._fail(token, self.TERM_STARTS)

        self._advance()
        self._consume("(")
        if token.text in FAMILIES:
            params = [self._int()]
            while token.text == "Theta" and self._at(","):
                self._advance()
                params.append(self._int())
            self._consume(")")
            return FamilyAtom(token.text, tuple(params), token.location)
        if token.text == "join":
            return self._join(token.location)
        if token.text == "power":
            expr = self._expression()
            self._consume(",")
            r = self._int()
            self._consume(")")
            return Power(expr, r, token.location)
        return self._edit(token.location)

    def _join(self, location: Location) -> Join:
        left = self._expression()
        self._consume(",")
        right = self._expression()
        cross = None
        if self._at(","):
            self._advance()
            cross = self._edges()
        self._consume(")")
        return Join(left, right, cross, location)

    def _edit(self, location: Location) -> Edit:
        expr = self._expression()
        sections = {}
        while self._at(";"):
            self._advance()
            key = self._current
            if key.kind != "name" or key.text not in ("add", "del") or key.text in sections:
                self._fail(key, {"add", "del"} - set(sections))
            self._advance()
            self._consume("=")
            sections[key.text] = self._edges()
        self._consume(")")
        return Edit(expr, sections.get("add", ()), sections.get("del", ()), location)

    def _edges(self) -> EdgeSpec:
        edges = [self._edge()]
        while self._at(",") and self._tokens[self._index + 1].text == "(":
            self._advance()
            edges.append(self._edge())
        return tuple(edges)

    def _edge(self) -> Tuple[int, int]:
        self._consume("(")
        u = self._int()
        self._consume(",")
        v = self._int()
        self._consume(")")
        return u, v


def parse_expr(text: str) -> GraphExpr:
    """
    Parse a graph expression.

    Raises:
        ExprSyntaxError: with line, column and the set of expected tokens
    """
    return Parser(text).parse()


def _edges_text(edges: EdgeSpec) -> str:
    return ",".join(f"({u},{v})" for u, v in edges)


def pretty_print(expr: GraphExpr) -> str:
    """Canonical text that parses back to an equal expression"""
    if isinstance(expr, FamilyAtom):
        return f"{expr.family}({','.join(str(p) for p in expr.params)})"
    if isinstance(expr, Product):
        right = pretty_print(expr.right)
        if isinstance(expr.right, Product):
            right = f"({right})"
        return f"{pretty_print(expr.left)} x {right}"
    if isinstance(expr, Join):
        cross = "" if expr.cross_edges is None else f", {_edges_text(expr.cross_edges)}"
        return f"join({pretty_print(expr.left)}, {pretty_print(expr.right)}{cross})"
    if isinstance(expr, Power):
        return f"power({pretty_print(expr.expr)}, {expr.r})"
    if isinstance(expr, Edit):
        parts = [pretty_print(expr.expr)]
        if expr.adds:
            parts.append(f"add={_edges_text(expr.adds)}")
        if expr.deletes:
            parts.append(f"del={_edges_text(expr.deletes)}")
        return f"edit({'; '.join(parts)})"
    if isinstance(expr, FileRef):
        return f"file({expr.path})"
    raise TypeError(f"not a graph expression: {expr!r}")
