import io
import json
import sys
import tokenize
from pathlib import Path

HERE = Path(__file__).resolve().parent
REPO = HERE.parent.parent
sys.path.insert(0, str(HERE.parent))

import generate  # noqa: E402

CORPUS = REPO / "data" / "corpus"
COMMITTED = REPO / "data" / "fixtures.json"


def tok_stream(source):
    return list(tokenize.generate_tokens(io.StringIO(source).readline))


def test_normalize_drops_structural_tokens():
    toks = tok_stream("x = 1  # c\n")
    records = [generate.normalize_token(t) for t in toks]
    kept = [r for r in records if r is not None]
    assert [r["type"] for r in kept] == ["NAME", "EQUAL", "NUMBER", "EOL"]


def test_normalize_reclassifies_keywords():
    toks = tok_stream("True\n")
    first = generate.normalize_token(toks[0])
    assert first["type"] == "KEYWORD"
    assert first["text"] == "True"


def test_normalize_example_call():
    toks = tok_stream("logging.getLogger()\n")
    kept = [generate.normalize_token(t) for t in toks]
    types = [r["type"] for r in kept if r is not None]
    assert types == ["NAME", "DOT", "NAME", "LPAR", "RPAR", "EOL"]


def test_markers_lose_their_text():
    toks = tok_stream("if x:\n    pass\n")
    kept = [generate.normalize_token(t) for t in toks]
    for rec in kept:
        if rec is not None and rec["type"] in ("EOL", "INDENT", "DEDENT"):
            assert rec["text"] == ""


def test_failing_file_recorded_not_fatal(tmp_path):
    src = tmp_path / "src"
    src.mkdir()
    (src / "ok.py").write_text("x = 1\n")
    (src / "broken.py").write_text("s = '''never closed\n")
    out = tmp_path / "fixtures.json"
    count = generate.generate(src, out)
    assert count == 2
    records = json.loads(out.read_text())
    by_file = {r["file"]: r for r in records}
    assert "error" in by_file["broken.py"]
    assert "tokens" in by_file["ok.py"]


def test_records_ordered_by_path(tmp_path):
    src = tmp_path / "src"
    (src / "sub").mkdir(parents=True)
    (src / "b.py").write_text("b = 2\n")
    (src / "a.py").write_text("a = 1\n")
    (src / "sub" / "c.py").write_text("c = 3\n")
    out = tmp_path / "fixtures.json"
    generate.generate(src, out)
    records = json.loads(out.read_text())
    assert [r["file"] for r in records] == ["a.py", "b.py", "sub/c.py"]


def test_rerun_is_byte_identical(tmp_path):
    out1 = tmp_path / "one.json"
    out2 = tmp_path / "two.json"
    generate.generate(CORPUS, out1)
    generate.generate(CORPUS, out2)
    assert out1.read_bytes() == out2.read_bytes()


def test_reproduces_committed_fixtures(tmp_path):
    out = tmp_path / "fixtures.json"
    generate.generate(CORPUS, out)
    assert out.read_bytes() == COMMITTED.read_bytes()
