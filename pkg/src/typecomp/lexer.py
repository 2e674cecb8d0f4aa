"""Error-tolerant Python lexer with normalized token types.

The lexer is total: any text, including an incomplete prefix of a program,
produces a token list. Malformed input degrades to ERRORTOKEN entries rather
than raising. On complete, well-formed files the (text, type, line, col)
output is pinned byte-for-byte against golden fixtures generated from the
reference standard-library tokenizer.
"""
from __future__ import annotations

import re
from enum import Enum, unique
from typing import NamedTuple

TAB_SIZE = 8

# Python 3.7 reserved words, compiled in so classification does not depend on
# the interpreter running the lexer.
KEYWORDS = frozenset({
    "False", "None", "True", "and", "as", "assert", "async", "await",
    "break", "class", "continue", "def", "del", "elif", "else", "except",
    "finally", "for", "from", "global", "if", "import", "in", "is", "lambda",
    "nonlocal", "not", "or", "pass", "raise", "return", "try", "while",
    "with", "yield",
})

# The 46 operator/delimiter spellings with their exact type names
# (Python 3.7 operator set: no COLONEQUAL).
OP_TYPE_NAMES = {
    "(": "LPAR", ")": "RPAR", "[": "LSQB", "]": "RSQB", ":": "COLON",
    ",": "COMMA", ";": "SEMI", "+": "PLUS", "-": "MINUS", "*": "STAR",
    "/": "SLASH", "|": "VBAR", "&": "AMPER", "<": "LESS", ">": "GREATER",
    "=": "EQUAL", ".": "DOT", "%": "PERCENT", "{": "LBRACE", "}": "RBRACE",
    "==": "EQEQUAL", "!=": "NOTEQUAL", "<=": "LESSEQUAL",
    ">=": "GREATEREQUAL", "~": "TILDE", "^": "CIRCUMFLEX",
    "<<": "LEFTSHIFT", ">>": "RIGHTSHIFT", "**": "DOUBLESTAR",
    "+=": "PLUSEQUAL", "-=": "MINEQUAL", "*=": "STAREQUAL",
    "/=": "SLASHEQUAL", "%=": "PERCENTEQUAL", "&=": "AMPEREQUAL",
    "|=": "VBAREQUAL", "^=": "CIRCUMFLEXEQUAL", "<<=": "LEFTSHIFTEQUAL",
    ">>=": "RIGHTSHIFTEQUAL", "**=": "DOUBLESTAREQUAL", "//": "DOUBLESLASH",
    "//=": "DOUBLESLASHEQUAL", "@": "AT", "@=": "ATEQUAL", "->": "RARROW",
    "...": "ELLIPSIS",
}

_PRIMARY_TAGS = (
    "NAME", "KEYWORD", "NUMBER", "STRING", "INDENT", "DEDENT", "EOL",
    "ERRORTOKEN",
)

TokenType = unique(Enum("TokenType", [*_PRIMARY_TAGS, *OP_TYPE_NAMES.values()]))

# operator text -> TokenType member
OP_TYPES = {text: TokenType[name] for text, name in OP_TYPE_NAMES.items()}

# operator spellings grouped by length for longest-match scanning
_OPS_BY_LEN = {
    n: frozenset(t for t in OP_TYPE_NAMES if len(t) == n) for n in (3, 2, 1)
}


class RawToken(NamedTuple):
    """Pre-normalization token as produced by lex()."""

    kind: str  # NAME NUMBER STRING OP NEWLINE NL COMMENT INDENT DEDENT ERRORTOKEN
    text: str
    line: int  # 1-based start line
    col: int   # 0-based start column


class TypedToken(NamedTuple):
    """Normalized token: text plus one of the 54 token types."""

    text: str
    ttype: TokenType
    line: int
    col: int


def is_keyword(name: str) -> bool:
    """True iff name is one of the 35 Python 3.7 reserved words."""
    return name in KEYWORDS


def _all_string_prefixes() -> frozenset[str]:
    out = set()
    for combo in ("b", "r", "u", "f", "br", "rb", "fr", "rf"):
        for mask in range(1 << len(combo)):
            out.add("".join(
                c.upper() if mask >> i & 1 else c for i, c in enumerate(combo)
            ))
    return frozenset(out)


STRING_PREFIXES = _all_string_prefixes()

_NAME_RE = re.compile(r"\w+", re.UNICODE)

# Numeric literal grammar of the reference tokenizer. Alternation order
# (imaginary, float, int) matters: the regex engine takes the first
# alternative that matches, which reproduces the reference tokenization of
# forms such as "1.5j", "1e3", "0x1f" and leading-zero integers.
_NUMBER_RE = re.compile(
    r"""
      [0-9](?:_?[0-9])*[jJ]
    | (?: [0-9](?:_?[0-9])*\.(?:[0-9](?:_?[0-9])*)?
        | \.[0-9](?:_?[0-9])*
      )(?:[eE][-+]?[0-9](?:_?[0-9])*)?[jJ]?
    | [0-9](?:_?[0-9])*[eE][-+]?[0-9](?:_?[0-9])*[jJ]?
    | 0[xX](?:_?[0-9a-fA-F])+
    | 0[bB](?:_?[01])+
    | 0[oO](?:_?[0-7])+
    | (?:0(?:_?0)*|[1-9](?:_?[0-9])*)
    """,
    re.VERBOSE,
)


def _find_triple_end(line: str, pos: int, term: str) -> int:
    """Index just past the closing triple quote on this line, or -1.

    A backslash escapes the following character, including in raw strings
    (termination-wise, mirroring the reference tokenizer)."""
    i, n = pos, len(line)
    while i < n:
        if line[i] == "\\":
            i += 2
        elif line.startswith(term, i):
            return i + len(term)
        else:
            i += 1
    return -1


def _scan_single_rest(line: str, pos: int, quote: str) -> tuple[str, int]:
    """Scan the body of a one-quote string starting after its opening quote.

    Returns (status, index): ("closed", just past the closing quote),
    ("continues", end of line) when a backslash escapes the final newline,
    or ("broken", index of the newline or end of line)."""
    i, n = pos, len(line)
    while i < n:
        c = line[i]
        if c == "\\":
            if line[i + 1:i + 2] == "\n":
                return "continues", n
            i += 2
        elif c == quote:
            return "closed", i + 1
        elif c == "\n":
            return "broken", i
        else:
            i += 1
    return "broken", n


class _Lexer:
    def __init__(self, source: str):
        # Positions refer to the LF-normalized text.
        source = source.replace("\r\n", "\n").replace("\r", "\n")
        self.lines = source.splitlines(keepends=True)
        self.tokens: list[RawToken] = []
        self.parenlev = 0
        self.continued = False
        self.indents = [0]
        # multi-line string state
        self.contstr_term: str | None = None
        self.contstr_parts: list[str] = []
        self.contstr_start = (0, 0)
        self.needcont = False  # single-quoted continuation (backslash-newline)
        self.contstr_resume = 0
        # suppress the implicit EOL when the source ends inside a fragment
        self.eof_error = False
        self.lnum = 0

    def emit(self, kind: str, text: str, line: int, col: int) -> None:
        self.tokens.append(RawToken(kind, text, line, col))

    def run(self) -> list[RawToken]:
        last_line = ""
        stopped_mid_line = False
        for self.lnum, line in enumerate(self.lines, start=1):
            if self.contstr_term is not None:
                if not self._continue_string(line):
                    continue
                pos = self.contstr_resume
            elif self.parenlev == 0 and not self.continued:
                pos = self._measure_indent(line)
                if pos is None:
                    stopped_mid_line = True
                    break
            else:
                self.continued = False
                pos = 0
            self._scan_line(line, pos)
            last_line = line

        if self.contstr_term is not None:
            # source ended inside an unterminated multi-line string
            self.emit("ERRORTOKEN", "".join(self.contstr_parts), *self.contstr_start)
            self.eof_error = True
        elif (last_line and not stopped_mid_line
              and not last_line.endswith("\n")
              and not last_line.strip().startswith("#")
              and self.parenlev == 0 and not self.continued
              and not self.eof_error):
            # implicit end-of-line for a final line without a newline
            self.emit("NEWLINE", "", self.lnum, len(last_line))
        end = self.lnum + 1 if self.lines else 1
        for _ in self.indents[1:]:
            self.emit("DEDENT", "", end, 0)
        return self.tokens

    def _continue_string(self, line: str) -> bool:
        """Feed one more line to a continued string. Returns True when the
        string closed; contstr_resume then holds the next scan position."""
        term = self.contstr_term
        assert term is not None
        if len(term) == 3:
            end = _find_triple_end(line, 0, term)
            if end < 0:
                self.contstr_parts.append(line)
                return False
        else:
            status, end = _scan_single_rest(line, 0, term)
            if status == "continues":
                self.contstr_parts.append(line)
                return False
            if status == "broken":
                # the whole fragment, including this line, is one error token
                self.contstr_parts.append(line)
                self.emit("ERRORTOKEN", "".join(self.contstr_parts),
                          *self.contstr_start)
                self._reset_contstr()
                if not line.endswith("\n"):
                    self.eof_error = True
                return False
        self.contstr_parts.append(line[:end])
        self.emit("STRING", "".join(self.contstr_parts), *self.contstr_start)
        self._reset_contstr()
        self.contstr_resume = end
        return True

    def _reset_contstr(self) -> None:
        self.contstr_term = None
        self.contstr_parts = []
        self.needcont = False

    def _measure_indent(self, line: str) -> int | None:
        """Handle indentation at the start of a logical line. Returns the
        scan position, or None when the source ends on a whitespace-only
        fragment without a newline."""
        col = pos = 0
        while pos < len(line):
            ch = line[pos]
            if ch == " ":
                col += 1
            elif ch == "\t":
                col = (col // TAB_SIZE + 1) * TAB_SIZE
            elif ch == "\f":
                col = 0
            else:
                break
            pos += 1
        if pos == len(line):
            return None
        if line[pos] in "#\n":
            # blank or comment-only line: no indent bookkeeping
            if line[pos] == "#":
                comment = line[pos:].rstrip("\n")
                self.emit("COMMENT", comment, self.lnum, pos)
                pos += len(comment)
            self.emit("NL", line[pos:], self.lnum, pos)
            return len(line)
        if col > self.indents[-1]:
            self.indents.append(col)
            self.emit("INDENT", line[:pos], self.lnum, 0)
        while col < self.indents[-1]:
            self.indents.pop()
            self.emit("DEDENT", "", self.lnum, pos)
        if col != self.indents[-1]:
            # dedent to a level never pushed; record it and realign
            self.emit("ERRORTOKEN", line[:pos], self.lnum, 0)
            self.indents.append(col)
        return pos

    def _scan_line(self, line: str, pos: int) -> None:
        n = len(line)
        while pos < n:
            ch = line[pos]
            if ch in " \t\f":
                pos += 1
            elif ch == "\n":
                kind = "NL" if self.parenlev > 0 else "NEWLINE"
                self.emit(kind, "\n", self.lnum, pos)
                pos += 1
            elif ch == "#":
                comment = line[pos:].rstrip("\n")
                self.emit("COMMENT", comment, self.lnum, pos)
                pos += len(comment)
            elif ch.isdigit() or (ch == "." and line[pos + 1:pos + 2].isdigit()):
                m = _NUMBER_RE.match(line, pos)
                assert m is not None
                self.emit("NUMBER", m.group(), self.lnum, pos)
                pos = m.end()
            elif ch in "'\"":
                pos = self._scan_string(line, pos, "")
            elif ch == "_" or ch.isalpha() or (not ch.isascii() and _NAME_RE.match(ch)):
                m = _NAME_RE.match(line, pos)
                assert m is not None
                word = m.group()
                if word in STRING_PREFIXES and line[m.end():m.end() + 1] in ("'", '"'):
                    pos = self._scan_string(line, m.end(), word)
                else:
                    self.emit("NAME", word, self.lnum, pos)
                    pos = m.end()
            elif ch == "\\" and line.startswith("\\\n", pos):
                self.continued = True
                pos += 2
            else:
                op = self._match_op(line, pos)
                if op is not None:
                    if ch in "([{":
                        self.parenlev += 1
                    elif ch in ")]}":
                        self.parenlev -= 1
                    self.emit("OP", op, self.lnum, pos)
                    pos += len(op)
                else:
                    self.emit("ERRORTOKEN", ch, self.lnum, pos)
                    pos += 1

    @staticmethod
    def _match_op(line: str, pos: int) -> str | None:
        for length, ops in _OPS_BY_LEN.items():
            candidate = line[pos:pos + length]
            if candidate in ops:
                return candidate
        return None

    def _scan_string(self, line: str, quote_pos: int, prefix: str) -> int:
        """Scan a string whose opening quote is at quote_pos; prefix (possibly
        empty) sits immediately before it. Returns the next scan position."""
        start_col = quote_pos - len(prefix)
        q = line[quote_pos]
        if line.startswith(q * 3, quote_pos):
            term = q * 3
            end = _find_triple_end(line, quote_pos + 3, term)
            if end >= 0:
                self.emit("STRING", line[start_col:end], self.lnum, start_col)
                return end
            # spans multiple lines
            self.contstr_term = term
            self.contstr_parts = [line[start_col:]]
            self.contstr_start = (self.lnum, start_col)
            self.needcont = False
            return len(line)
        status, end = _scan_single_rest(line, quote_pos + 1, q)
        if status == "closed":
            self.emit("STRING", line[start_col:end], self.lnum, start_col)
            return end
        if status == "continues":
            self.contstr_term = q
            self.contstr_parts = [line[start_col:]]
            self.contstr_start = (self.lnum, start_col)
            self.needcont = True
            return len(line)
        # unterminated on this line: the dangling fragment is one ERRORTOKEN
        self.emit("ERRORTOKEN", line[start_col:end], self.lnum, start_col)
        if end == len(line):
            self.eof_error = True
        return end


def lex(source: str) -> list[RawToken]:
    """Tokenize arbitrary text. Never raises: unlexable characters and
    unterminated constructs become ERRORTOKEN entries."""
    return _Lexer(source).run()


def normalize(raw: list[RawToken]) -> list[TypedToken]:
    """Map raw tokens onto the normalized type alphabet.

    COMMENT tokens are dropped, reserved-word NAMEs become KEYWORD, NEWLINE
    and NL both become EOL, OP tokens carry their exact sub-type, and marker
    tokens (INDENT/DEDENT/EOL) lose their text.
    """
    out: list[TypedToken] = []
    for tok in raw:
        kind = tok.kind
        if kind == "COMMENT":
            continue
        if kind in ("NEWLINE", "NL"):
            out.append(TypedToken("", TokenType.EOL, tok.line, tok.col))
        elif kind in ("INDENT", "DEDENT"):
            out.append(TypedToken("", TokenType[kind], tok.line, tok.col))
        elif kind == "NAME":
            ttype = TokenType.KEYWORD if tok.text in KEYWORDS else TokenType.NAME
            out.append(TypedToken(tok.text, ttype, tok.line, tok.col))
        elif kind == "OP":
            out.append(TypedToken(tok.text, OP_TYPES[tok.text], tok.line, tok.col))
        else:
            out.append(TypedToken(tok.text, TokenType[kind], tok.line, tok.col))
    return out


def lex_typed(source: str) -> list[TypedToken]:
    """Convenience: normalize(lex(source))."""
    return normalize(lex(source))
