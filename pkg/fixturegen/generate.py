#!/usr/bin/env python3
"""Golden lexer fixture generator.

Runs the standard-library tokenizer over a corpus of Python files and writes
one normalized token record per file. The normalization matches the primary
lexer: ENCODING/ENDMARKER/COMMENT dropped, reserved-word NAMEs reclassified
as KEYWORD, NEWLINE and NL mapped to EOL, marker tokens (INDENT/DEDENT/EOL)
stripped of their text, operators recorded by their exact type name.

Output schema (fixtures.json): a JSON array, ordered by file path, of
  {"file": <relative path>, "tokens": [{"text", "type", "line", "col"}, ...]}
Files the reference tokenizer rejects are recorded as
  {"file": <relative path>, "error": <exception class name>}

Development tool only; the primary package never imports it.
"""
from __future__ import annotations

import argparse
import io
import json
import keyword
import sys
import token
import tokenize
from pathlib import Path

DROPPED = {tokenize.ENCODING, tokenize.ENDMARKER, tokenize.COMMENT}
MARKERS = {tokenize.NEWLINE, tokenize.NL, tokenize.INDENT, tokenize.DEDENT}


def normalize_token(tok: tokenize.TokenInfo) -> dict | None:
    if tok.type in DROPPED:
        return None
    name = token.tok_name[tok.exact_type]
    text = tok.string
    if tok.type in (tokenize.NEWLINE, tokenize.NL):
        name, text = "EOL", ""
    elif tok.type in (tokenize.INDENT, tokenize.DEDENT):
        text = ""
    elif tok.type == tokenize.NAME and keyword.iskeyword(text):
        name = "KEYWORD"
    return {"text": text, "type": name, "line": tok.start[0], "col": tok.start[1]}


def record_for(path: Path, root: Path) -> dict:
    rel = path.relative_to(root).as_posix()
    source = path.read_text(encoding="utf-8")
    source = source.replace("\r\n", "\n").replace("\r", "\n")
    tokens = []
    try:
        for tok in tokenize.generate_tokens(io.StringIO(source).readline):
            rec = normalize_token(tok)
            if rec is not None:
                tokens.append(rec)
    except (tokenize.TokenError, IndentationError, SyntaxError) as exc:
        return {"file": rel, "error": type(exc).__name__}
    return {"file": rel, "tokens": tokens}


def generate(src_dir: Path, out_file: Path) -> int:
    files = sorted(src_dir.rglob("*.py"), key=lambda p: p.relative_to(src_dir).as_posix())
    records = [record_for(p, src_dir) for p in files]
    payload = json.dumps(records, ensure_ascii=True, separators=(",", ":"))
    out_file.write_text(payload + "\n", encoding="utf-8")
    return len(records)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("src_dir", type=Path, help="directory of .py corpus files")
    parser.add_argument("out_file", type=Path, help="fixtures.json destination")
    args = parser.parse_args(argv)
    if not args.src_dir.is_dir():
        print(f"error: not a directory: {args.src_dir}", file=sys.stderr)
        return 2
    count = generate(args.src_dir, args.out_file)
    print(f"wrote {count} fixture records to {args.out_file}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
