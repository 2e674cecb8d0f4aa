"""Character-prefix syntactic-validity scanning.

Two pluggable checkers decide whether a text prefix is a syntactically
plausible program state:

* token-level: the prefix lexes without ERRORTOKEN, brackets balance, and no
  whitespace-only final fragment opens a deeper indent than the current block
  (a "dangling indent").
* grammar-subset: additionally, the token stream must parse as a complete
  module of the Python subset declared in docs/grammar.md.

Grammar acceptance implies the token-level pass; both checkers are total.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigError
from .lexer import TAB_SIZE, TokenType, TypedToken, lex_typed

CHECKERS = ("token", "grammar")

_OPENERS = {TokenType.LPAR, TokenType.LSQB, TokenType.LBRACE}
_CLOSERS = {TokenType.RPAR, TokenType.RSQB, TokenType.RBRACE}

_LEX_ERROR = "lex-error"
_UNBALANCED = "unbalanced-bracket"
_DANGLING = "dangling-indent"
_GRAMMAR = "grammar-reject"


@dataclass
class ParseStatus:
    verdict: str                  # "Parsable" | "NotParsable"
    reason: str | None = None     # present iff NotParsable

    @property
    def ok(self) -> bool:
        return self.verdict == "Parsable"


@dataclass
class ProbeReport:
    file: str
    total_chars: int = 0
    parsable: int = 0
    failed: int = 0
    reasons: dict[str, int] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"file": self.file, "total_chars": self.total_chars,
                "parsable": self.parsable, "failed": self.failed,
                "reasons": dict(sorted(self.reasons.items()))}


def _expanded_col(ws: str) -> int:
    col = 0
    for ch in ws:
        if ch == "\t":
            col = (col // TAB_SIZE + 1) * TAB_SIZE
        elif ch == "\f":
            col = 0
        else:
            col += 1
    return col


def _dangling_indent(prefix: str) -> bool:
    """True when the prefix ends on a whitespace-only fragment that indents
    deeper than the last non-blank line (an opened, still-empty block)."""
    nl = prefix.rfind("\n")
    tail = prefix[nl + 1:]
    if not tail or tail.strip():
        return False
    ref = 0
    for line in reversed(prefix[:nl + 1].splitlines()):
        if line.strip() and not line.lstrip().startswith("#"):
            ref = _expanded_col(line[:len(line) - len(line.lstrip())])
            break
    return _expanded_col(tail) > ref


def _bracket_depth(tokens: list[TypedToken]) -> int:
    depth = 0
    for tok in tokens:
        if tok.ttype in _OPENERS:
            depth += 1
        elif tok.ttype in _CLOSERS:
            depth -= 1
    return depth


def check_prefix(prefix: str, checker: str = "token") -> ParseStatus:
    """Verdict for one prefix under the named checker. Never raises on any
    input text."""
    if checker not in CHECKERS:
        raise ConfigError("unknown checker %r" % checker)
    tokens = lex_typed(prefix)
    if any(t.ttype is TokenType.ERRORTOKEN for t in tokens):
        return ParseStatus("NotParsable", _LEX_ERROR)
    depth = _bracket_depth(tokens)
    if checker == "token":
        if depth != 0:
            return ParseStatus("NotParsable", _UNBALANCED)
        if _dangling_indent(prefix):
            return ParseStatus("NotParsable", _DANGLING)
        return ParseStatus("Parsable")
    if depth == 0 and _dangling_indent(prefix):
        return ParseStatus("NotParsable", _DANGLING)
    if _Parser(tokens).parse_module():
        return ParseStatus("Parsable")
    return ParseStatus("NotParsable", _GRAMMAR)


def scan_file(source: str, checker: str = "token",
              path: str = "<memory>") -> ProbeReport:
    """Evaluate check_prefix on every prefix length 1..len(source)."""
    report = ProbeReport(file=path, total_chars=len(source))
    for k in range(1, len(source) + 1):
        status = check_prefix(source[:k], checker)
        if status.ok:
            report.parsable += 1
        else:
            report.failed += 1
            report.reasons[status.reason] = report.reasons.get(status.reason, 0) + 1
    return report


def scan_path(path: Path, checker: str = "token") -> ProbeReport:
    source = path.read_text(encoding="utf-8")
    return scan_file(source, checker, path=str(path))


def aggregate(reports: list[ProbeReport]) -> dict:
    """Character-weighted success/failure fractions with reason breakdown."""
    if not reports:
        raise ConfigError("aggregate needs at least one report")
    total = sum(r.total_chars for r in reports)
    parsable = sum(r.parsable for r in reports)
    failed = sum(r.failed for r in reports)
    reasons: dict[str, int] = {}
    for r in reports:
        for reason, count in r.reasons.items():
            reasons[reason] = reasons.get(reason, 0) + count
    return {
        "files": len(reports),
        "total_chars": total,
        "parsable": parsable,
        "failed": failed,
        "parsable_pct": 100.0 * parsable / total if total else 0.0,
        "failed_pct": 100.0 * failed / total if total else 0.0,
        "reasons": dict(sorted(reasons.items())),
    }


def summary_table(agg: dict) -> str:
    """One-table text summary of an aggregate result."""
    lines = [
        "Prefix parsable?     | Percentage",
        "---------------------+-----------",
        "Successful prefixes  | %6.2f%%" % agg["parsable_pct"],
        "Failed prefixes      | %6.2f%%" % agg["failed_pct"],
    ]
    for reason, count in agg["reasons"].items():
        lines.append("  %-19s| %d" % (reason, count))
    return "\n".join(lines)


# --- recursive-descent parser for the declared subset ------------------------

_ATOM_KEYWORDS = {"True", "False", "None"}
_CMP_TYPES = {TokenType.LESS, TokenType.GREATER, TokenType.LESSEQUAL,
              TokenType.GREATEREQUAL, TokenType.EQEQUAL, TokenType.NOTEQUAL}
_AUG_TYPES = {TokenType.PLUSEQUAL, TokenType.MINEQUAL, TokenType.STAREQUAL,
              TokenType.SLASHEQUAL, TokenType.PERCENTEQUAL,
              TokenType.AMPEREQUAL, TokenType.VBAREQUAL,
              TokenType.CIRCUMFLEXEQUAL, TokenType.LEFTSHIFTEQUAL,
              TokenType.RIGHTSHIFTEQUAL, TokenType.DOUBLESTAREQUAL,
              TokenType.DOUBLESLASHEQUAL, TokenType.ATEQUAL}


class _Reject(Exception):
    pass


class _Parser:
    """Backtracking-free descent over normalized tokens. EOL tokens inside
    brackets are newline continuations and get skipped."""

    def __init__(self, tokens: list[TypedToken]):
        self.toks = tokens
        self.i = 0
        self.depth = 0

    # cursor helpers
    def _skip_continuations(self) -> None:
        while (self.depth > 0 and self.i < len(self.toks)
               and self.toks[self.i].ttype is TokenType.EOL):
            self.i += 1

    def peek(self) -> TypedToken | None:
        self._skip_continuations()
        return self.toks[self.i] if self.i < len(self.toks) else None

    def at(self, ttype: TokenType) -> bool:
        tok = self.peek()
        return tok is not None and tok.ttype is ttype

    def at_kw(self, word: str) -> bool:
        tok = self.peek()
        return (tok is not None and tok.ttype is TokenType.KEYWORD
                and tok.text == word)

    def advance(self) -> TypedToken:
        tok = self.peek()
        if tok is None:
            raise _Reject()
        if tok.ttype in _OPENERS:
            self.depth += 1
        elif tok.ttype in _CLOSERS:
            self.depth -= 1
        self.i += 1
        return tok

    def eat(self, ttype: TokenType) -> TypedToken:
        if not self.at(ttype):
            raise _Reject()
        return self.advance()

    def eat_kw(self, word: str) -> None:
        if not self.at_kw(word):
            raise _Reject()
        self.advance()

    # entry point
    def parse_module(self) -> bool:
        try:
            while self.peek() is not None:
                if self.at(TokenType.EOL):
                    self.advance()
                else:
                    self.statement()
            return True
        except _Reject:
            return False

    # statements
    def statement(self) -> None:
        if self.at_kw("def"):
            self.func_def()
        elif self.at_kw("class"):
            self.class_def()
        elif self.at_kw("if"):
            self.if_stmt()
        elif self.at_kw("for"):
            self.for_stmt()
        elif self.at_kw("while"):
            self.while_stmt()
        else:
            self.simple_stmt()

    def simple_stmt(self) -> None:
        if self.at_kw("pass"):
            self.advance()
        elif self.at_kw("return"):
            self.advance()
            if not self.at(TokenType.EOL):
                self.expr_list()
        elif self.at_kw("import"):
            self.advance()
            self.dotted_as()
            while self.at(TokenType.COMMA):
                self.advance()
                self.dotted_as()
        elif self.at_kw("from"):
            self.advance()
            self.dotted_name()
            self.eat_kw("import")
            self.import_as()
            while self.at(TokenType.COMMA):
                self.advance()
                self.import_as()
        else:
            self.expr_list()
            if self.peek() is not None and self.peek().ttype in _AUG_TYPES:
                self.advance()
                self.expr_list()
            else:
                while self.at(TokenType.EQUAL):
                    self.advance()
                    self.expr_list()
        self.eat(TokenType.EOL)

    def dotted_name(self) -> None:
        self.eat(TokenType.NAME)
        while self.at(TokenType.DOT):
            self.advance()
            self.eat(TokenType.NAME)

    def dotted_as(self) -> None:
        self.dotted_name()
        if self.at_kw("as"):
            self.advance()
            self.eat(TokenType.NAME)

    def import_as(self) -> None:
        self.eat(TokenType.NAME)
        if self.at_kw("as"):
            self.advance()
            self.eat(TokenType.NAME)

    def suite(self) -> None:
        self.eat(TokenType.EOL)
        while self.at(TokenType.EOL):
            self.advance()
        self.eat(TokenType.INDENT)
        saw = False
        while self.peek() is not None and not self.at(TokenType.DEDENT):
            if self.at(TokenType.EOL):
                self.advance()
            else:
                self.statement()
                saw = True
        if not saw:
            raise _Reject()
        self.eat(TokenType.DEDENT)

    def func_def(self) -> None:
        self.eat_kw("def")
        self.eat(TokenType.NAME)
        self.eat(TokenType.LPAR)
        if not self.at(TokenType.RPAR):
            self.param()
            while self.at(TokenType.COMMA):
                self.advance()
                if self.at(TokenType.RPAR):
                    break
                self.param()
        self.eat(TokenType.RPAR)
        if self.at(TokenType.RARROW):
            self.advance()
            self.expr()
        self.eat(TokenType.COLON)
        self.suite()

    def param(self) -> None:
        if self.at(TokenType.STAR) or self.at(TokenType.DOUBLESTAR):
            self.advance()
        self.eat(TokenType.NAME)
        if self.at(TokenType.COLON):
            self.advance()
            self.expr()
        if self.at(TokenType.EQUAL):
            self.advance()
            self.expr()

    def class_def(self) -> None:
        self.eat_kw("class")
        self.eat(TokenType.NAME)
        if self.at(TokenType.LPAR):
            self.advance()
            if not self.at(TokenType.RPAR):
                self.expr_list()
            self.eat(TokenType.RPAR)
        self.eat(TokenType.COLON)
        self.suite()

    def if_stmt(self) -> None:
        self.eat_kw("if")
        self.expr()
        self.eat(TokenType.COLON)
        self.suite()
        while self.at_kw("elif"):
            self.advance()
            self.expr()
            self.eat(TokenType.COLON)
            self.suite()
        if self.at_kw("else"):
            self.advance()
            self.eat(TokenType.COLON)
            self.suite()

    def for_stmt(self) -> None:
        self.eat_kw("for")
        self.target_list()
        self.eat_kw("in")
        self.expr_list()
        self.eat(TokenType.COLON)
        self.suite()

    def while_stmt(self) -> None:
        self.eat_kw("while")
        self.expr()
        self.eat(TokenType.COLON)
        self.suite()

    # expressions
    def expr_list(self) -> None:
        self.expr()
        while self.at(TokenType.COMMA):
            self.advance()
            if self._expr_start():
                self.expr()
            else:
                break  # trailing comma

    def target_list(self) -> None:
        self.postfix()
        while self.at(TokenType.COMMA):
            self.advance()
            if self._expr_start():
                self.postfix()
            else:
                break

    def _expr_start(self) -> bool:
        tok = self.peek()
        if tok is None:
            return False
        if tok.ttype in (TokenType.NAME, TokenType.NUMBER, TokenType.STRING,
                         TokenType.LPAR, TokenType.LSQB, TokenType.LBRACE,
                         TokenType.MINUS, TokenType.PLUS, TokenType.TILDE,
                         TokenType.ELLIPSIS):
            return True
        return (tok.ttype is TokenType.KEYWORD
                and (tok.text in _ATOM_KEYWORDS or tok.text == "not"))

    def expr(self) -> None:
        self.or_expr()
        if self.at_kw("if"):
            self.advance()
            self.or_expr()
            self.eat_kw("else")
            self.expr()

    def or_expr(self) -> None:
        self.and_expr()
        while self.at_kw("or"):
            self.advance()
            self.and_expr()

    def and_expr(self) -> None:
        self.not_expr()
        while self.at_kw("and"):
            self.advance()
            self.not_expr()

    def not_expr(self) -> None:
        if self.at_kw("not"):
            self.advance()
            self.not_expr()
        else:
            self.comparison()

    def comparison(self) -> None:
        self.bit_or()
        while True:
            tok = self.peek()
            if tok is None:
                return
            if tok.ttype in _CMP_TYPES:
                self.advance()
            elif self.at_kw("in"):
                self.advance()
            elif self.at_kw("is"):
                self.advance()
                if self.at_kw("not"):
                    self.advance()
            elif self.at_kw("not"):
                self.advance()
                self.eat_kw("in")
            else:
                return
            self.bit_or()

    def _binop_chain(self, sub, types) -> None:
        sub()
        while self.peek() is not None and self.peek().ttype in types:
            self.advance()
            sub()

    def bit_or(self) -> None:
        self._binop_chain(self.bit_xor, {TokenType.VBAR})

    def bit_xor(self) -> None:
        self._binop_chain(self.bit_and, {TokenType.CIRCUMFLEX})

    def bit_and(self) -> None:
        self._binop_chain(self.shift, {TokenType.AMPER})

    def shift(self) -> None:
        self._binop_chain(self.arith, {TokenType.LEFTSHIFT,
                                       TokenType.RIGHTSHIFT})

    def arith(self) -> None:
        self._binop_chain(self.term, {TokenType.PLUS, TokenType.MINUS})

    def term(self) -> None:
        self._binop_chain(self.factor, {TokenType.STAR, TokenType.SLASH,
                                        TokenType.DOUBLESLASH,
                                        TokenType.PERCENT, TokenType.AT})

    def factor(self) -> None:
        if self.at(TokenType.MINUS) or self.at(TokenType.PLUS) \
                or self.at(TokenType.TILDE):
            self.advance()
            self.factor()
        else:
            self.power()

    def power(self) -> None:
        self.postfix()
        if self.at(TokenType.DOUBLESTAR):
            self.advance()
            self.factor()

    def postfix(self) -> None:
        self.atom()
        while True:
            if self.at(TokenType.LPAR):
                self.advance()
                if not self.at(TokenType.RPAR):
                    self.call_args()
                self.eat(TokenType.RPAR)
            elif self.at(TokenType.LSQB):
                self.advance()
                self.subscript()
                while self.at(TokenType.COMMA):
                    self.advance()
                    self.subscript()
                self.eat(TokenType.RSQB)
            elif self.at(TokenType.DOT):
                self.advance()
                self.eat(TokenType.NAME)
            else:
                return

    def call_args(self) -> None:
        self.call_arg()
        while self.at(TokenType.COMMA):
            self.advance()
            if self.at(TokenType.RPAR):
                return  # trailing comma
            self.call_arg()

    def call_arg(self) -> None:
        if self.at(TokenType.STAR) or self.at(TokenType.DOUBLESTAR):
            self.advance()
            self.expr()
            return
        tok = self.peek()
        j = self.i + 1
        while j < len(self.toks) and self.toks[j].ttype is TokenType.EOL:
            j += 1
        nxt = self.toks[j] if j < len(self.toks) else None
        if (tok is not None and tok.ttype is TokenType.NAME
                and nxt is not None and nxt.ttype is TokenType.EQUAL):
            self.advance()
            self.advance()
            self.expr()
            return
        self.expr()
        if self.at_kw("for"):
            self.comp_clauses()

    def subscript(self) -> None:
        saw = False
        if self._expr_start():
            self.expr()
            saw = True
        if self.at(TokenType.COLON):
            self.advance()
            saw = True
            if self._expr_start():
                self.expr()
            if self.at(TokenType.COLON):
                self.advance()
                if self._expr_start():
                    self.expr()
        if not saw:
            raise _Reject()

    def comp_clauses(self) -> None:
        self.eat_kw("for")
        self.target_list()
        self.eat_kw("in")
        self.or_expr()
        while self.at_kw("if"):
            self.advance()
            self.or_expr()

    def atom(self) -> None:
        tok = self.peek()
        if tok is None:
            raise _Reject()
        if tok.ttype in (TokenType.NAME, TokenType.NUMBER, TokenType.ELLIPSIS):
            self.advance()
            return
        if tok.ttype is TokenType.STRING:
            while self.at(TokenType.STRING):
                self.advance()  # implicit concatenation
            return
        if tok.ttype is TokenType.KEYWORD and tok.text in _ATOM_KEYWORDS:
            self.advance()
            return
        if tok.ttype is TokenType.LPAR:
            self.advance()
            if not self.at(TokenType.RPAR):
                self.expr()
                if self.at_kw("for"):
                    self.comp_clauses()
                else:
                    while self.at(TokenType.COMMA):
                        self.advance()
                        if self._expr_start():
                            self.expr()
                        else:
                            break
            self.eat(TokenType.RPAR)
            return
        if tok.ttype is TokenType.LSQB:
            self.advance()
            if not self.at(TokenType.RSQB):
                self.expr()
                if self.at_kw("for"):
                    self.comp_clauses()
                else:
                    while self.at(TokenType.COMMA):
                        self.advance()
                        if self._expr_start():
                            self.expr()
                        else:
                            break
            self.eat(TokenType.RSQB)
            return
        if tok.ttype is TokenType.LBRACE:
            self.advance()
            if not self.at(TokenType.RBRACE):
                self.expr()
                if self.at(TokenType.COLON):
                    self.advance()
                    self.expr()
                    if self.at_kw("for"):
                        self.comp_clauses()
                    else:
                        while self.at(TokenType.COMMA):
                            self.advance()
                            if not self._expr_start():
                                break
                            self.expr()
                            self.eat(TokenType.COLON)
                            self.expr()
                elif self.at_kw("for"):
                    self.comp_clauses()
                else:
                    while self.at(TokenType.COMMA):
                        self.advance()
                        if self._expr_start():
                            self.expr()
                        else:
                            break
            self.eat(TokenType.RBRACE)
            return
        raise _Reject()
