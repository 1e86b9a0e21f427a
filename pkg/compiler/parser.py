import re
from dataclasses import dataclass

from core.errors import ParseError
from .ast import And, Const, Implies, MaxN, MinN, Not, Or, Var

KEYWORDS = ('and', 'or', 'not', 'implies', 'min', 'max')

_TOKEN_RE = re.compile(r"""
    (?P<space>[ \t\r]+)
  | (?P<newline>\n)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[(),])
""", re.VERBOSE)

_ATOM_START = ("a number", "a variable name", "'('", "'not'", "'min'", "'max'")
_OPERATORS = ("'and'", "'or'", "'implies'")

# Brackets plus negations; trees deeper than this overflow the recursive passes that follow parsing.
MAX_NESTING = 100


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int

    def describe(self):
        if self.kind == 'eof':
            return "end of input"
        return repr(self.text)


def tokenize(text):
    """
    Split source text into tokens carrying 1-based line and column

    Parameters:
    text (str): Expression source

    Returns:
    list: Tokens, ending with an 'eof' token
    """
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        column = pos - line_start + 1
        if match is None:
            listed = ", ".join(sorted(_ATOM_START))
            raise ParseError(f"expected one of {{{listed}}}, found {text[pos]!r}", line, column, _ATOM_START)
        kind = match.lastgroup
        value = match.group()
        if kind == 'newline':
            line += 1
            line_start = match.end()
        elif kind == 'name':
            tokens.append(Token('keyword' if value in KEYWORDS else 'name', value, line, column))
        elif kind != 'space':
            tokens.append(Token(kind, value, line, column))
        pos = match.end()
    tokens.append(Token('eof', '', line, pos - line_start + 1))
    return tokens


class Parser:
    """
    Recursive-descent parser for fuzzy expressions

    Precedence from loosest to tightest: implies (right-associative), or,
    and, not. min(...) and max(...) take one or more comma-separated
    arguments. Nesting through brackets, negations and operator chains is
    capped at MAX_NESTING levels.
    """

    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0
        self.depth = 0

    @property
    def current(self):
        return self.tokens[self.pos]

    def _at(self, kind, text=None):
        token = self.current
        return token.kind == kind and (text is None or token.text == text)

    def _advance(self):
        token = self.current
        self.pos += 1
        return token

    def _fail(self, expected):
        token = self.current
        found = token.describe()
        listed = ", ".join(sorted(expected))
        raise ParseError(f"expected one of {{{listed}}}, found {found}", token.line, token.column, expected)

    def _expect(self, kind, text, expected):
        if not self._at(kind, text):
            self._fail(expected)
        return self._advance()

    def _nest(self):
        self.depth += 1
        if self.depth > MAX_NESTING:
            token = self.current
            raise ParseError(f"nesting too deep (more than {MAX_NESTING} levels)", token.line, token.column)

    def parse(self):
        try:
            expr = self.parse_implies()
        except RecursionError:
            token = self.current
            raise ParseError("nesting too deep", token.line, token.column) from None
        if not self._at('eof'):
            self._fail(_OPERATORS + ("end of input",))
        return expr

    def parse_implies(self):
        left = self.parse_or()
        if self._at('keyword', 'implies'):
            self._nest()
            self._advance()
            right = self.parse_implies()
            self.depth -= 1
            return Implies(left, right)
        return left

    def parse_or(self):
        expr = self.parse_and()
        count = 0
        while self._at('keyword', 'or'):
            self._nest()
            self._advance()
            count += 1
            expr = Or(expr, self.parse_and())
        self.depth -= count
        return expr

    def parse_and(self):
        # chains nest to the left, so each operator adds a level
        expr = self.parse_not()
        count = 0
        while self._at('keyword', 'and'):
            self._nest()
            self._advance()
            count += 1
            expr = And(expr, self.parse_not())
        self.depth -= count
        return expr

    def parse_not(self):
        count = 0
        while self._at('keyword', 'not'):
            self._nest()
            self._advance()
            count += 1
        expr = self.parse_atom()
        for _ in range(count):
            expr = Not(expr)
        self.depth -= count
        return expr

    def parse_atom(self):
        token = self.current
        if token.kind == 'number':
            self._advance()
            value = float(token.text)
            if not 0.0 <= value <= 1.0:
                raise ParseError(f"constant {token.text} outside [0, 1]", token.line, token.column)
            return Const(value)
        if token.kind == 'name':
            self._advance()
            return Var(token.text)
        if token.kind == 'punct' and token.text == '(':
            self._nest()
            self._advance()
            expr = self.parse_implies()
            self._expect('punct', ')', _OPERATORS + ("')'",))
            self.depth -= 1
            return expr
        if token.kind == 'keyword' and token.text in ('min', 'max'):
            self._nest()
            self._advance()
            self._expect('punct', '(', ("'('",))
            items = [self.parse_implies()]
            while self._at('punct', ','):
                self._advance()
                items.append(self.parse_implies())
            self._expect('punct', ')', _OPERATORS + ("','", "')'"))
            self.depth -= 1
            return MinN(items) if token.text == 'min' else MaxN(items)
        self._fail(_ATOM_START)


def parse(text):
    """
    Parse expression source into a tree

    Parameters:
    text (str): Source such as "max(a, b) and not c implies 0.5"

    Returns:
    Expression tree (Var, Const, Not, And, Or, Implies, MinN, MaxN)

    Raises:
    ParseError: With line, column and the set of expected tokens
    """
    return Parser(text).parse()
