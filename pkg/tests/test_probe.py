import pytest

from typecomp.errors import ConfigError
from typecomp.probe import (ParseStatus, aggregate, check_prefix, scan_file,
                            summary_table)


def test_full_valid_file_parsable_both_checkers():
    source = "def f(a):\n    return a + 1\n\nx = f(2)\n"
    assert check_prefix(source, "token").ok
    assert check_prefix(source, "grammar").ok


def test_open_paren_prefix():
    status = check_prefix("def f(", "token")
    assert status.verdict == "NotParsable"
    assert status.reason == "unbalanced-bracket"
    status = check_prefix("def f(", "grammar")
    assert status.reason == "grammar-reject"


def test_mid_string_prefix_is_lex_error():
    for checker in ("token", "grammar"):
        status = check_prefix("x = 'unfinished", checker)
        assert status.reason == "lex-error", checker


def test_dangling_indent_fragment():
    status = check_prefix("if x:\n    ", "token")
    assert status.reason == "dangling-indent"
    status = check_prefix("x = 1\n  ", "grammar")
    assert status.reason == "dangling-indent"


def test_incomplete_statement_grammar_only():
    prefix = "x = 1 +"
    assert check_prefix(prefix, "token").ok
    assert check_prefix(prefix, "grammar").reason == "grammar-reject"


def test_missing_suite_grammar_only():
    prefix = "if x:\n"
    assert check_prefix(prefix, "token").ok
    assert not check_prefix(prefix, "grammar").ok


def test_unknown_checker():
    with pytest.raises(ConfigError):
        check_prefix("x", "ast")


def test_not_parsable_carries_reason():
    status = check_prefix("def f(", "token")
    assert isinstance(status, ParseStatus)
    assert status.reason is not None


def test_scan_counts_sum_to_length():
    source = "x = f(1)\n"
    report = scan_file(source, "token", path="mem")
    assert report.total_chars == len(source)
    assert report.parsable + report.failed == len(source)
    assert sum(report.reasons.values()) == report.failed


def test_scan_empty_file():
    report = scan_file("", "token")
    assert report.total_chars == 0
    assert report.parsable == 0 and report.failed == 0


def test_single_name_tokens_mostly_parsable():
    source = "abc\n" * 3
    report = scan_file(source, "grammar")
    # every prefix of a bare NAME line parses except none: all characters
    # form either a complete name expression or a shorter name
    assert report.parsable == report.total_chars


def test_aggregate_single_report_is_identity():
    source = "x = f(1)\n"
    report = scan_file(source, "token")
    agg = aggregate([report])
    assert agg["total_chars"] == report.total_chars
    assert agg["parsable"] == report.parsable
    assert agg["parsable_pct"] == pytest.approx(
        100.0 * report.parsable / report.total_chars)


def test_aggregate_requires_reports():
    with pytest.raises(ConfigError):
        aggregate([])


def test_summary_table_renders():
    agg = aggregate([scan_file("x = (1]\n", "token")])
    table = summary_table(agg)
    assert "Successful prefixes" in table
    assert "%" in table


def test_grammar_acceptance_implies_token_pass():
    sources = [
        "def f(a, b=1):\n    if a:\n        return b\n    return 0\n",
        "import os\nfrom math import sqrt\n\nx = [i ** 2 for i in range(4)]\n",
        "class C:\n    def m(self):\n        return self\n",
        "while x < 3:\n    x += 1\n",
        "d = {'a': 1, 'b': 2}\nv = d['a']\n",
    ]
    for source in sources:
        for k in range(1, len(source) + 1):
            grammar = check_prefix(source[:k], "grammar")
            token = check_prefix(source[:k], "token")
            if grammar.ok:
                assert token.ok, (source[:k],)


def test_prefix_failure_fraction_nontrivial():
    source = "def f(a):\n    return a * 2\n"
    report = scan_file(source, "grammar")
    assert 0 < report.failed < report.total_chars


def test_grammar_accepts_every_corpus_file(corpus_sources):
    rejected = [name for name, source in corpus_sources.items()
                if not check_prefix(source, "grammar").ok]
    assert rejected == []


def test_grammar_statement_coverage():
    snippets = [
        "pass\n",
        "return\n",  # grammar is lexical: return outside def accepted
        "import os, sys\n",
        "import os.path as osp\n",
        "from a.b import c as d, e\n",
        "x, y = 1, 2\n",
        "a = b = c\n",
        "x += 1\n",
        "f(*args, **kw, key=1)\n",
        "t = (1,)\n",
        "s = {1, 2}\n",
        "g = (i for i in xs)\n",
        "m = [i for i in xs if i > 0]\n",
        "n = {k: v for k, v in d.items()}\n",
        "z = a if b else c\n",
        "def g(*a, **k):\n    return a\n",
        "def h(x: int = 1) -> int:\n    return x\n",
        "q = x[1:2, ::3]\n",
        "w = not a and b or not c\n",
        "v = a is not None\n",
        "u = b not in xs\n",
        "e = ...\n",
    ]
    for snippet in snippets:
        assert check_prefix(snippet, "grammar").ok, snippet


def test_grammar_rejects_out_of_subset():
    snippets = [
        "try:\n    pass\nexcept Exception:\n    pass\n",
        "with open(p) as fh:\n    pass\n",
        "lambda x: x\n",
        "@dec\ndef f():\n    pass\n",
        "del x\n",
        "assert x\n",
        "yield x\n",
        "for i in xs:\n    break\n",
    ]
    for snippet in snippets:
        assert not check_prefix(snippet, "grammar").ok, snippet
