import random

import pytest

from typecomp.align import align, chunk, read_dataset, write_dataset
from typecomp.bpe import Encoder, Vocab
from typecomp.corpus import (Sample, build_literal_tables,
                             default_specials, sample_from_tokens)
from typecomp.errors import AlignmentError, CorpusFormatError
from typecomp.lexer import lex_typed


@pytest.fixture(scope="module")
def toy_vocab():
    # hand-built merges so "logging" encodes to exactly [logg, ing]
    specials = default_specials()
    chars = ["(", ")", "=", "g", "i", "l", "n", "o", "x"]
    merged = ["lo", "log", "logg", "in", "ing"]
    merges = [("l", "o"), ("lo", "g"), ("log", "g"), ("i", "n"), ("in", "g")]
    return Vocab(tokens=specials + chars + merged, merges=merges,
                 specials=frozenset(specials))


def test_repeated_type_for_split_word(toy_vocab):
    sample = Sample(["logging"], ["\u27e8NAME\u27e9"])
    out = align(sample, toy_vocab)
    assert len(out.code_ids) == len(out.type_ids)
    assert len(out.code_ids) > 1  # BPE split the word
    assert len(set(out.type_ids)) == 1
    assert out.boundaries == [(0, len(out.code_ids))]


def test_single_subword_single_type(toy_vocab):
    sample = Sample(["("], ["\u27e8LPAR\u27e9"])
    out = align(sample, toy_vocab)
    assert len(out.code_ids) == 1
    assert out.type_ids == [toy_vocab.id_of["\u27e8LPAR\u27e9"]]


def test_unknown_type_token_raises(toy_vocab):
    sample = Sample(["x"], ["\u27e8NOT_A_TYPE\u27e9"])
    with pytest.raises(AlignmentError):
        align(sample, toy_vocab)


def projection(out, vocab):
    """Collapse each boundary span back to one type token string."""
    collapsed = []
    for start, end in out.boundaries:
        span = set(out.type_ids[start:end])
        assert len(span) == 1
        collapsed.append(vocab.tokens[span.pop()])
    return collapsed


def test_projection_recovers_type_tokens(toy_vocab):
    sample = Sample(["logging", "(", "x", ")"],
                    ["\u27e8NAME\u27e9", "\u27e8LPAR\u27e9",
                     "\u27e8NAME\u27e9", "\u27e8RPAR\u27e9"])
    out = align(sample, toy_vocab)
    assert projection(out, toy_vocab) == sample.type_tokens


def test_boundaries_partition(toy_vocab):
    sample = Sample(["logging", "value", "x"], ["\u27e8NAME\u27e9"] * 3)
    out = align(sample, toy_vocab)
    assert out.boundaries[0][0] == 0
    assert out.boundaries[-1][1] == len(out.code_ids)
    for (a, b), (c, d) in zip(out.boundaries, out.boundaries[1:]):
        assert b == c and a < b


def test_chunking_windows(toy_vocab):
    sample = Sample(["logging"] * 30, ["\u27e8NAME\u27e9"] * 30)
    out = align(sample, toy_vocab)
    pieces = chunk(out, block_size=16)
    assert all(len(p.code_ids) <= 16 for p in pieces)
    assert sum(len(p.code_ids) for p in pieces) == len(out.code_ids)
    rejoined_code = [i for p in pieces for i in p.code_ids]
    assert rejoined_code == out.code_ids
    for p in pieces:
        assert p.boundaries[0][0] == 0
        assert p.boundaries[-1][1] == len(p.code_ids)


def test_chunk_noop_when_short(toy_vocab):
    sample = Sample(["x"], ["\u27e8NAME\u27e9"])
    out = align(sample, toy_vocab)
    assert chunk(out, block_size=16) == [out]


def test_dataset_roundtrip(tmp_path, toy_vocab):
    samples = [align(Sample(["logging", "x"], ["\u27e8NAME\u27e9"] * 2), toy_vocab),
               align(Sample(["("], ["\u27e8LPAR\u27e9"]), toy_vocab)]
    path = tmp_path / "data.bin"
    write_dataset(samples, toy_vocab.content_hash(), path)
    back = read_dataset(path, expected_hash=toy_vocab.content_hash())
    assert back == [(s.code_ids, s.type_ids) for s in samples]


def test_dataset_hash_mismatch(tmp_path, toy_vocab):
    path = tmp_path / "data.bin"
    write_dataset([], "0" * 64, path)
    with pytest.raises(CorpusFormatError):
        read_dataset(path, expected_hash="f" * 64)


def test_dataset_bad_magic(tmp_path):
    path = tmp_path / "junk.bin"
    path.write_bytes(b"NOTMAGIC" + b"\x00" * 16)
    with pytest.raises(CorpusFormatError):
        read_dataset(path)


def test_equal_length_on_whole_corpus(prepared_corpus):
    from typecomp.corpus import load_split

    vocab = Vocab.load(prepared_corpus / "vocab.json")
    enc = Encoder(vocab)
    for split in ("train", "valid", "test"):
        for sample in load_split(prepared_corpus, split):
            out = align(sample, vocab, enc)
            assert len(out.code_ids) == len(out.type_ids)
            assert projection(out, vocab) == sample.type_tokens


SNIPPET_PARTS = [
    "def f(a, b):\n", "    return a + b\n", "x = 1\n", "y = 'text'\n",
    "if x:\n    y = 2\n", "while n < 3:\n    n += 1\n", "import os\n",
    "class C:\n    pass\n", "z = [1, 2, 3]\n", "w = {'k': 1}\n",
    "for i in range(3):\n    total += i\n", "s = f(x, y)\n",
]


def test_fuzz_alignment_invariant(prepared_corpus):
    """1,000 seeded random snippets through lexer -> corpus -> align."""
    from typecomp.corpus import load_split  # noqa: F401 (split built already)

    vocab = Vocab.load(prepared_corpus / "vocab.json")
    enc = Encoder(vocab)
    tables = build_literal_tables([])
    rng = random.Random(4242)
    for _ in range(1000):
        source = "".join(rng.choices(SNIPPET_PARTS,
                                     k=rng.randint(1, 6)))
        tokens = lex_typed(source)
        sample = sample_from_tokens(tokens, tables)
        out = align(sample, vocab, enc)
        assert len(out.code_ids) == len(out.type_ids)
        assert projection(out, vocab) == sample.type_tokens
