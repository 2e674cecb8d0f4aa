from pathlib import Path

from typecomp.lexer import (KEYWORDS, OP_TYPE_NAMES, RawToken, TokenType,
                            is_keyword, lex, lex_typed, normalize)

CORPUS = Path(__file__).resolve().parent.parent / "data" / "corpus"


def types_of(source):
    return [t.ttype.name for t in lex_typed(source)]


def test_simple_call_token_texts():
    toks = lex("logging.getLogger()")
    texts = [t.text for t in toks if t.kind not in ("NEWLINE", "NL")]
    assert texts == ["logging", ".", "getLogger", "(", ")"]


def test_simple_call_types():
    toks = lex_typed("logging.getLogger()")
    assert [t.ttype.name for t in toks][:5] == ["NAME", "DOT", "NAME", "LPAR", "RPAR"]


def test_empty_input():
    assert lex("") == []
    assert lex_typed("") == []


def test_unterminated_string_prefix_ends_with_errortoken():
    toks = lex("x = 'unterminated")
    assert toks[-1].kind == "ERRORTOKEN"
    assert toks[-1].text == "'unterminated"


def test_unterminated_triple_string():
    toks = lex_typed("x = '''unterm\nnext")
    assert toks[-1].ttype is TokenType.ERRORTOKEN


def test_assignment_with_eol():
    assert types_of("x = 1\n") == ["NAME", "EQUAL", "NUMBER", "EOL"]


def test_keyword_reclassification():
    toks = lex_typed("True\n")
    assert toks[0].ttype is TokenType.KEYWORD


def test_is_keyword():
    assert is_keyword("def")
    assert is_keyword("async")
    assert is_keyword("True")
    assert not is_keyword("logging")
    assert not is_keyword("match")  # soft keyword, not reserved
    assert len(KEYWORDS) == 35


def test_exact_op_table_has_46_types():
    assert len(OP_TYPE_NAMES) == 46
    assert len(set(OP_TYPE_NAMES.values())) == 46


def test_all_operators_lex_to_exact_types():
    for text, name in OP_TYPE_NAMES.items():
        toks = lex_typed("a %s b\n" % text) if text not in ("...",) \
            else lex_typed("%s\n" % text)
        assert TokenType[name] in [t.ttype for t in toks], text


def test_indent_dedent_positions():
    toks = lex_typed("def f():\n    return 1\n")
    kinds = [(t.ttype.name, t.line, t.col) for t in toks]
    assert ("INDENT", 2, 0) in kinds
    assert ("DEDENT", 3, 0) in kinds


def test_bracket_newline_becomes_eol():
    # newlines inside brackets are NL in the reference tokenizer: kept as EOL
    assert types_of("f(\n1)\n") == ["NAME", "LPAR", "EOL", "NUMBER", "RPAR", "EOL"]


def test_backslash_continuation_suppresses_eol():
    assert types_of("x = \\\n1\n") == ["NAME", "EQUAL", "NUMBER", "EOL"]


def test_implicit_eol_without_trailing_newline():
    toks = lex_typed("x = 1")
    assert toks[-1].ttype is TokenType.EOL
    assert (toks[-1].line, toks[-1].col) == (1, 5)


def test_error_char_degrades_not_raises():
    toks = lex_typed("x = 1 $ 2\n")
    assert TokenType.ERRORTOKEN in [t.ttype for t in toks]


def test_inconsistent_dedent_degrades_not_raises():
    toks = lex_typed("if a:\n    x = 1\n  y = 2\n")
    assert TokenType.ERRORTOKEN in [t.ttype for t in toks]


def test_numbers_match_reference_forms():
    source = "a = 0xDEAD_beef\nb = .5\nc = 2.\nd = 6.022e23\ne = 4j\nf = 0b10\n"
    toks = [t for t in lex_typed(source) if t.ttype is TokenType.NUMBER]
    assert [t.text for t in toks] == ["0xDEAD_beef", ".5", "2.", "6.022e23",
                                     "4j", "0b10"]


def test_string_prefixes_lex_as_single_string():
    source = "a = r'x'\nb = rb'y'\nc = f\"{a}\"\nd = B'z'\n"
    toks = [t for t in lex_typed(source) if t.ttype is TokenType.STRING]
    assert len(toks) == 4


def test_tab_indentation():
    toks = lex_typed("if x:\n\ty = 1\n")
    assert TokenType.INDENT in [t.ttype for t in toks]


# -- invariants ---------------------------------------------------------------

def _to_raw(tok):
    if tok.ttype is TokenType.EOL:
        return RawToken("NL", "\n", tok.line, tok.col)
    if tok.ttype in (TokenType.INDENT, TokenType.DEDENT):
        return RawToken(tok.ttype.name, "", tok.line, tok.col)
    if tok.ttype in (TokenType.NAME, TokenType.KEYWORD):
        return RawToken("NAME", tok.text, tok.line, tok.col)
    if tok.ttype.name in OP_TYPE_NAMES.values():
        return RawToken("OP", tok.text, tok.line, tok.col)
    return RawToken(tok.ttype.name, tok.text, tok.line, tok.col)


def test_normalize_is_idempotent(corpus_sources):
    for source in list(corpus_sources.values())[:30]:
        once = lex_typed(source)
        twice = normalize([_to_raw(t) for t in once])
        assert [(t.ttype, t.text) for t in twice] == \
            [(t.ttype, t.text) for t in once]


def test_positions_non_decreasing(corpus_sources):
    for source in corpus_sources.values():
        toks = lex_typed(source)
        pos = [(t.line, t.col) for t in toks]
        assert pos == sorted(pos)


def test_balanced_markers(corpus_sources):
    for source in corpus_sources.values():
        toks = lex_typed(source)
        indents = sum(t.ttype is TokenType.INDENT for t in toks)
        dedents = sum(t.ttype is TokenType.DEDENT for t in toks)
        assert indents == dedents


def test_roundtrip_type_sequence(corpus_sources):
    markers = {TokenType.INDENT, TokenType.DEDENT, TokenType.EOL}
    for source in corpus_sources.values():
        toks = [t for t in lex_typed(source) if t.ttype not in markers]
        rejoined = " ".join(t.text for t in toks)
        relexed = [t for t in lex_typed(rejoined) if t.ttype not in markers]
        assert [t.ttype for t in relexed] == [t.ttype for t in toks]


def test_prefix_totality_sample(corpus_sources):
    names = sorted(corpus_sources)[::10]
    for name in names:
        source = corpus_sources[name]
        for k in range(len(source) + 1):
            assert isinstance(lex(source[:k]), list)


def test_fixture_equivalence(corpus_sources, golden_fixtures):
    mismatches = []
    for record in golden_fixtures:
        assert "tokens" in record, "reference tokenizer rejected %s" % record
        source = corpus_sources[record["file"]]
        mine = [{"text": t.text, "type": t.ttype.name,
                 "line": t.line, "col": t.col} for t in lex_typed(source)]
        if mine != record["tokens"]:
            mismatches.append(record["file"])
    assert mismatches == []
