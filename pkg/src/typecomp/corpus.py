"""Corpus construction: literal masking, marker insertion, sample
serialization and train/valid/test splitting.

A corpus sample is a pair of equal-length word sequences: code tokens (masked
literal text, marker tokens, verbatim everything else) and their type tokens,
both wrapped in sentence sentinels. On disk a split is a pair of parallel
text files (`<split>.code` / `<split>.type`), one sample per line,
space-separated tokens, UTF-8, LF line endings.
"""
from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigError, CorpusFormatError
from .lexer import STRING_PREFIXES, TokenType, TypedToken, lex_typed

BOS = "⟨s⟩"
EOS = "⟨/s⟩"
UNK = "⟨UNK⟩"
EOL_MARK = "⟨EOL⟩"
INDENT_MARK = "⟨INDENT⟩"
DEDENT_MARK = "⟨DEDENT⟩"
STR_LIT = "⟨STR_LIT⟩"
NUM_LIT = "⟨NUM_LIT⟩"

# Marker used for the token type itself, e.g. NAME -> ⟨NAME⟩.
def type_token(ttype: TokenType) -> str:
    return "⟨%s⟩" % ttype.name


# Every type token the lexer can produce, in enum order.
ALL_TYPE_TOKENS = tuple(type_token(t) for t in TokenType)

# Structural markers shared by the code and type streams.
MARKER_TOKENS = (BOS, EOS, UNK, EOL_MARK, INDENT_MARK, DEDENT_MARK)

_MARKER_BY_TYPE = {
    TokenType.EOL: EOL_MARK,
    TokenType.INDENT: INDENT_MARK,
    TokenType.DEDENT: DEDENT_MARK,
}


def default_specials(tables: "LiteralTables | None" = None) -> list[str]:
    """Canonical special-token list: structural markers, every type token,
    and (when tables are given) the literal placeholders. Deduplicated since
    the EOL/INDENT/DEDENT markers double as type tokens."""
    out = list(MARKER_TOKENS) + list(ALL_TYPE_TOKENS)
    if tables is not None:
        out.extend(tables.placeholders())
    return list(dict.fromkeys(out))


@dataclass
class LiteralTables:
    """Most frequent string/number literal values of the training split."""

    top_strings: list[str] = field(default_factory=list)
    top_numbers: list[str] = field(default_factory=list)
    counts: dict[str, Counter] = field(default_factory=lambda: {
        "strings": Counter(), "numbers": Counter()})

    def placeholders(self) -> list[str]:
        """Placeholder special tokens, value-bearing ones in rank order."""
        out = [STR_LIT, NUM_LIT]
        out.extend(str_placeholder(v) for v in self.top_strings)
        out.extend(num_placeholder(v) for v in self.top_numbers)
        return out

    def save(self, path: Path) -> None:
        payload = {"strings": self.top_strings, "numbers": self.top_numbers}
        path.write_text(json.dumps(payload, ensure_ascii=True) + "\n",
                        encoding="utf-8")

    @classmethod
    def load(cls, path: Path) -> "LiteralTables":
        payload = json.loads(path.read_text(encoding="utf-8"))
        return cls(top_strings=list(payload["strings"]),
                   top_numbers=list(payload["numbers"]))


@dataclass
class Sample:
    """Parallel word-level code/type token sequences with sentinels."""

    code_tokens: list[str]
    type_tokens: list[str]

    def __post_init__(self):
        if len(self.code_tokens) != len(self.type_tokens):
            raise CorpusFormatError(
                "code/type length mismatch: %d vs %d"
                % (len(self.code_tokens), len(self.type_tokens)))


def strip_quotes(text: str) -> str:
    """The value of a string literal: prefix letters and quotes removed."""
    i = 0
    while i < len(text) and text[i] not in "'\"":
        i += 1
    if i == len(text) or (i > 0 and text[:i].lower() not in STRING_PREFIXES):
        return text
    body = text[i:]
    for q in ('"""', "'''", '"', "'"):
        if body.startswith(q):
            end = body[len(q):]
            if end.endswith(q):
                return end[:-len(q)]
            return end
    return body


# Characters that would break the space-separated line format (or collide
# with marker brackets) are percent-encoded inside placeholder values.
def escape_value(value: str) -> str:
    out = []
    for ch in value:
        if ch <= " " or ch == "\x7f" or ch in "%<>⟨⟩":
            out.append("".join("%%%02X" % b for b in ch.encode("utf-8")))
        else:
            out.append(ch)
    return "".join(out)


def unescape_value(escaped: str) -> str:
    out = bytearray()
    i = 0
    while i < len(escaped):
        if escaped[i] == "%" and i + 3 <= len(escaped):
            out.extend(bytes([int(escaped[i + 1:i + 3], 16)]))
            i += 3
        else:
            out.extend(escaped[i].encode("utf-8"))
            i += 1
    return out.decode("utf-8")


def str_placeholder(value: str) -> str:
    return "⟨STR_LIT:%s⟩" % escape_value(value)


def num_placeholder(value: str) -> str:
    return "⟨NUM_LIT:%s⟩" % escape_value(value)


def build_literal_tables(streams: list[list[TypedToken]],
                         max_strings: int = 200,
                         max_numbers: int = 30) -> LiteralTables:
    """Count STRING/NUMBER literal values and keep the most frequent ones.

    Ordering: descending frequency, ties broken by ascending value."""
    strings: Counter = Counter()
    numbers: Counter = Counter()
    for tokens in streams:
        for tok in tokens:
            if tok.ttype is TokenType.STRING:
                strings[strip_quotes(tok.text)] += 1
            elif tok.ttype is TokenType.NUMBER:
                numbers[tok.text] += 1

    def top(counter: Counter, limit: int) -> list[str]:
        ranked = sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))
        return [value for value, _ in ranked[:limit]]

    return LiteralTables(top_strings=top(strings, max_strings),
                         top_numbers=top(numbers, max_numbers),
                         counts={"strings": strings, "numbers": numbers})


def mask_literals(tokens: list[TypedToken], tables: LiteralTables) -> list[str]:
    """Word-level code tokens with literals masked and markers inserted."""
    top_strings = set(tables.top_strings)
    top_numbers = set(tables.top_numbers)
    out = []
    for tok in tokens:
        marker = _MARKER_BY_TYPE.get(tok.ttype)
        if marker is not None:
            out.append(marker)
        elif tok.ttype is TokenType.STRING:
            value = strip_quotes(tok.text)
            out.append(str_placeholder(value) if value in top_strings else STR_LIT)
        elif tok.ttype is TokenType.NUMBER:
            out.append(num_placeholder(tok.text)
                       if tok.text in top_numbers else NUM_LIT)
        else:
            out.append(tok.text)
    return out


def sample_from_tokens(tokens: list[TypedToken], tables: LiteralTables) -> Sample:
    """Build one corpus sample (with sentinels) from a lexed file."""
    code = [BOS, *mask_literals(tokens, tables), EOS]
    types = [BOS, *(type_token(t.ttype) for t in tokens), EOS]
    return Sample(code, types)


def serialize_sample(sample: Sample) -> tuple[str, str]:
    return " ".join(sample.code_tokens), " ".join(sample.type_tokens)


def parse_sample(code_line: str, type_line: str) -> Sample:
    code = code_line.split(" ") if code_line else []
    types = type_line.split(" ") if type_line else []
    if len(code) != len(types):
        raise CorpusFormatError(
            "code/type length mismatch: %d vs %d" % (len(code), len(types)))
    return Sample(code, types)


def split_files(paths: list[Path], seed: int,
                ratios: tuple[float, float, float] = (0.8, 0.1, 0.1),
                ) -> dict[str, list[Path]]:
    """Seeded by-file shuffle into train/valid/test."""
    if abs(sum(ratios) - 1.0) > 1e-9:
        raise ConfigError("split ratios must sum to 1, got %r" % (ratios,))
    order = sorted(paths)
    random.Random(seed).shuffle(order)
    n = len(order)
    n_train = int(n * ratios[0])
    n_valid = int(n * ratios[1])
    return {
        "train": order[:n_train],
        "valid": order[n_train:n_train + n_valid],
        "test": order[n_train + n_valid:],
    }


@dataclass
class CorpusStats:
    used: int = 0
    skipped: list[str] = field(default_factory=list)


def build_corpus(src_dir: Path, out_dir: Path, seed: int,
                 ratios: tuple[float, float, float] = (0.8, 0.1, 0.1),
                 ) -> tuple[LiteralTables, CorpusStats]:
    """Lex every .py file, drop ERRORTOKEN-bearing ones, build literal tables
    on the training split, and write the six split files plus literals.json."""
    out_dir.mkdir(parents=True, exist_ok=True)
    stats = CorpusStats()
    lexed: dict[Path, list[TypedToken]] = {}
    for path in sorted(src_dir.rglob("*.py")):
        tokens = lex_typed(path.read_text(encoding="utf-8"))
        if any(t.ttype is TokenType.ERRORTOKEN for t in tokens):
            stats.skipped.append(path.relative_to(src_dir).as_posix())
            continue
        lexed[path] = tokens
        stats.used += 1

    splits = split_files(list(lexed), seed, ratios)
    tables = build_literal_tables([lexed[p] for p in splits["train"]])
    tables.save(out_dir / "literals.json")

    for name, paths in splits.items():
        code_lines, type_lines = [], []
        for p in paths:
            sample = sample_from_tokens(lexed[p], tables)
            code_line, type_line = serialize_sample(sample)
            code_lines.append(code_line)
            type_lines.append(type_line)
        (out_dir / f"{name}.code").write_text(
            "\n".join(code_lines) + ("\n" if code_lines else ""), encoding="utf-8")
        (out_dir / f"{name}.type").write_text(
            "\n".join(type_lines) + ("\n" if type_lines else ""), encoding="utf-8")
    return tables, stats


def load_split(out_dir: Path, name: str) -> list[Sample]:
    code_path = out_dir / f"{name}.code"
    type_path = out_dir / f"{name}.type"
    code_lines = code_path.read_text(encoding="utf-8").splitlines()
    type_lines = type_path.read_text(encoding="utf-8").splitlines()
    if len(code_lines) != len(type_lines):
        raise CorpusFormatError(
            "%s: %d code lines vs %d type lines"
            % (name, len(code_lines), len(type_lines)))
    return [parse_sample(c, t) for c, t in zip(code_lines, type_lines)]


def line_eval_cases(samples: list[Sample], seed: int, min_context: int = 10,
                    ) -> list[tuple[list[str], list[str]]]:
    """Line-completion eval pairs: (context tokens, ground-truth tokens).

    Each sample is cut at a seeded random position past the first
    min_context tokens; the ground truth runs up to and including the next
    end-of-line marker. Samples with no eligible cut are skipped."""
    rng = random.Random(seed)
    cases = []
    for sample in samples:
        code = sample.code_tokens
        eol_positions = [i for i, t in enumerate(code) if t == EOL_MARK]
        last_eol = eol_positions[-1] if eol_positions else -1
        # cut before position i means context = code[:i]; need an EOL at >= i
        candidates = [i for i in range(min_context, len(code)) if i <= last_eol]
        if not candidates:
            continue
        cut = rng.choice(candidates)
        gold_end = next(i for i in eol_positions if i >= cut)
        cases.append((code[:cut], code[cut:gold_end + 1]))
    return cases
