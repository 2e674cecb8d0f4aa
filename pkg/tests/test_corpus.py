import string

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from typecomp.corpus import (BOS, EOS, EOL_MARK, STR_LIT, NUM_LIT, Sample,
                             build_literal_tables, build_corpus, escape_value,
                             line_eval_cases, load_split, mask_literals,
                             parse_sample, sample_from_tokens,
                             serialize_sample, split_files, strip_quotes,
                             str_placeholder, type_token, unescape_value)
from typecomp.errors import CorpusFormatError
from typecomp.lexer import TokenType, lex_typed


def lexed(source):
    return lex_typed(source)


def test_strip_quotes_variants():
    assert strip_quotes("'utf-8'") == "utf-8"
    assert strip_quotes('"abc"') == "abc"
    assert strip_quotes("'''tri'''") == "tri"
    assert strip_quotes('r"raw"') == "raw"
    assert strip_quotes("rb'x'") == "x"
    assert strip_quotes("''") == ""


def test_literal_tables_max_frequency_heads_list():
    streams = [lexed("x = 'utf-8'\n")] * 50 + [lexed("y = 'rare'\n")]
    tables = build_literal_tables(streams)
    assert tables.top_strings[0] == "utf-8"


def test_literal_tables_tie_break_lexicographic():
    streams = [lexed("a = 'bb'\nb = 'aa'\n")]
    tables = build_literal_tables(streams)
    assert tables.top_strings == ["aa", "bb"]


def test_literal_tables_truncation():
    streams = [lexed("x = '%s'\n" % ("s%03d" % i)) for i in range(300)]
    tables = build_literal_tables(streams)
    assert len(tables.top_strings) == 200


def test_literal_tables_empty_corpus():
    tables = build_literal_tables([])
    assert tables.top_strings == [] and tables.top_numbers == []


def test_mask_literals_forms():
    tokens = lexed("s = 'utf-8'\nt = 'x9q!'\nn = 1\nm = 99999\n")
    tables = build_literal_tables([lexed("a = 'utf-8'\nb = 1\n")])
    masked = mask_literals(tokens, tables)
    assert "\u27e8STR_LIT:utf-8\u27e9" in masked
    assert STR_LIT in masked           # 'x9q!' is not in the table
    assert "\u27e8NUM_LIT:1\u27e9" in masked
    assert NUM_LIT in masked           # 99999 is not in the table
    assert EOL_MARK in masked


def test_mask_literals_markers_and_passthrough():
    tokens = lexed("def f():\n    return x\n")
    masked = mask_literals(tokens, build_literal_tables([]))
    assert masked == ["def", "f", "(", ")", ":", "\u27e8EOL\u27e9",
                      "\u27e8INDENT\u27e9", "return", "x", "\u27e8EOL\u27e9",
                      "\u27e8DEDENT\u27e9"]


def test_no_raw_literal_survives_masking(corpus_sources):
    tables = build_literal_tables([])
    for source in list(corpus_sources.values())[:40]:
        tokens = lexed(source)
        masked = mask_literals(tokens, tables)
        for tok, word in zip(tokens, masked):
            if tok.ttype in (TokenType.STRING, TokenType.NUMBER):
                assert word in (STR_LIT, NUM_LIT)


def test_sample_invariants():
    tokens = lexed("x = 1\n")
    sample = sample_from_tokens(tokens, build_literal_tables([]))
    assert sample.code_tokens[0] == BOS and sample.code_tokens[-1] == EOS
    assert sample.type_tokens[0] == BOS and sample.type_tokens[-1] == EOS
    assert len(sample.code_tokens) == len(sample.type_tokens)
    inner = sample.type_tokens[1:-1]
    assert inner == [type_token(t.ttype) for t in tokens]


def test_serialize_parse_example():
    sample = Sample(["\u27e8s\u27e9", "x", "\u27e8/s\u27e9"],
                    ["\u27e8s\u27e9", "\u27e8NAME\u27e9", "\u27e8/s\u27e9"])
    code_line, type_line = serialize_sample(sample)
    assert code_line == "\u27e8s\u27e9 x \u27e8/s\u27e9"
    assert type_line == "\u27e8s\u27e9 \u27e8NAME\u27e9 \u27e8/s\u27e9"
    back = parse_sample(code_line, type_line)
    assert back == sample


def test_parse_rejects_mismatched_lengths():
    with pytest.raises(CorpusFormatError):
        parse_sample("a b", "x")


def test_sample_constructor_rejects_mismatch():
    with pytest.raises(CorpusFormatError):
        Sample(["a"], [])


@given(st.lists(st.text(alphabet=string.printable, min_size=1), min_size=1,
                max_size=8))
@settings(max_examples=200, deadline=None)
def test_escape_value_roundtrip(parts):
    for value in parts:
        escaped = escape_value(value)
        assert " " not in escaped and "\n" not in escaped
        assert unescape_value(escaped) == value


def test_placeholder_escaping_keeps_one_word():
    ph = str_placeholder("hello world <x>")
    assert " " not in ph
    assert ph.startswith("\u27e8STR_LIT:") and ph.endswith("\u27e9")


def test_split_files_deterministic_and_partitioning(tmp_path):
    paths = []
    for i in range(30):
        p = tmp_path / ("f%02d.py" % i)
        p.write_text("x = %d\n" % i)
        paths.append(p)
    a = split_files(paths, seed=3)
    b = split_files(paths, seed=3)
    assert a == b
    assert len(a["train"]) == 24 and len(a["valid"]) == 3 and len(a["test"]) == 3
    assert set(a["train"]) | set(a["valid"]) | set(a["test"]) == set(paths)


def test_build_corpus_skips_errortoken_files(tmp_path):
    src = tmp_path / "src"
    src.mkdir()
    (src / "good.py").write_text("x = 1\n")
    (src / "alsogood.py").write_text("y = 2\n")
    (src / "bad.py").write_text("z = 'unterminated\n")
    out = tmp_path / "out"
    _, stats = build_corpus(src, out, seed=0)
    assert stats.used == 2
    assert stats.skipped == ["bad.py"]


def test_corpus_roundtrip_on_disk(tmp_path, corpus_dir):
    out = tmp_path / "out"
    build_corpus(corpus_dir, out, seed=1)
    for split in ("train", "valid", "test"):
        for sample in load_split(out, split):
            code_line, type_line = serialize_sample(sample)
            assert parse_sample(code_line, type_line) == sample


def test_type_multiset_matches_lexer(tmp_path, corpus_dir):
    out = tmp_path / "out"
    tables, _ = build_corpus(corpus_dir, out, seed=1)
    sources = {p.name: p.read_text(encoding="utf-8")
               for p in corpus_dir.glob("*.py")}
    samples = load_split(out, "valid")
    lexed_types = sorted(
        tuple(type_token(t.ttype) for t in lex_typed(s))
        for s in sources.values())
    for sample in samples:
        inner = tuple(sample.type_tokens[1:-1])
        assert list(inner) in [list(x) for x in lexed_types]


def test_indent_marker_once_per_block():
    source = "if a:\n    x = 1\n    y = 2\n    z = 3\n"
    masked = mask_literals(lexed(source), build_literal_tables([]))
    assert masked.count("\u27e8INDENT\u27e9") == 1
    assert masked.count("\u27e8DEDENT\u27e9") == 1


def test_line_eval_cases_construction():
    tokens = ["w%d" % i for i in range(9)]
    code = [BOS, *tokens, EOL_MARK, "a", "b", EOL_MARK, "c", EOS]
    sample = Sample(code, list(code))
    cases = line_eval_cases([sample], seed=5)
    assert len(cases) == 1
    ctx, gold = cases[0]
    assert len(ctx) >= 10
    assert gold[-1] == EOL_MARK
    assert ctx + gold == code[:len(ctx) + len(gold)]


def test_line_eval_cases_deterministic():
    code = [BOS] + ["t%d" % i for i in range(20)] + [EOL_MARK, "x", EOL_MARK, EOS]
    samples = [Sample(list(code), list(code)) for _ in range(4)]
    a = line_eval_cases(samples, seed=9)
    b = line_eval_cases(samples, seed=9)
    assert a == b
