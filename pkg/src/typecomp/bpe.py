"""Byte-pair-encoding subword vocabulary with protected special tokens.

BPE is word-internal: words are the corpus module's space-separated tokens.
Special tokens (markers, type tokens, literal placeholders) are atomic: they
never participate in merges and always encode to a single id. The base
alphabet is character-level; characters unseen at training time map to the
reserved ⟨UNK⟩ id.
"""
from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import UNK
from .errors import ConfigError, VocabError


@dataclass
class Vocab:
    tokens: list[str]                      # id = index
    merges: list[tuple[str, str]]          # rank order: earlier = higher priority
    specials: frozenset[str]
    id_of: dict[str, int] = field(init=False)
    _ranks: dict[tuple[str, str], int] = field(init=False, repr=False)

    def __post_init__(self):
        self.id_of = {tok: i for i, tok in enumerate(self.tokens)}
        if len(self.id_of) != len(self.tokens):
            raise VocabError("duplicate token strings in vocabulary")
        self._ranks = {pair: rank for rank, pair in enumerate(self.merges)}
        missing = [s for s in self.specials if s not in self.id_of]
        if missing:
            raise VocabError("specials without ids: %r" % missing)

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def unk_id(self) -> int:
        return self.id_of[UNK]

    def save(self, path: Path) -> None:
        path.write_bytes(self.to_bytes())

    def to_bytes(self) -> bytes:
        payload = {
            "merges": [list(pair) for pair in self.merges],
            "specials": sorted(self.specials),
            "tokens": self.tokens,
        }
        return (json.dumps(payload, ensure_ascii=True) + "\n").encode("utf-8")

    def content_hash(self) -> str:
        return hashlib.sha256(self.to_bytes()).hexdigest()

    @classmethod
    def load(cls, path: Path) -> "Vocab":
        payload = json.loads(path.read_text(encoding="utf-8"))
        return cls(tokens=list(payload["tokens"]),
                   merges=[tuple(p) for p in payload["merges"]],
                   specials=frozenset(payload["specials"]))


def train_bpe(word_counts: dict[str, int], target_size: int,
              specials: list[str]) -> Vocab:
    """Greedy frequency-based merging until the vocabulary reaches
    min(target_size, reachable size). Ties between equally frequent pairs go
    to the lexicographically smaller (left, right)."""
    special_list = list(dict.fromkeys(specials))
    if UNK not in special_list:
        special_list.insert(0, UNK)
    special_set = set(special_list)

    counted: Counter = Counter()
    for word, count in word_counts.items():
        if word not in special_set and word:
            counted[word] += count

    alphabet = sorted({ch for word in counted for ch in word})
    floor = len(special_list) + len(alphabet)
    if target_size < floor:
        raise ConfigError(
            "target_size %d below alphabet+specials floor %d"
            % (target_size, floor))

    tokens = special_list + alphabet
    known = set(tokens)
    merges: list[tuple[str, str]] = []
    # mutable symbol sequences for every distinct word still mergeable
    work = [(list(word), count) for word, count in sorted(counted.items())]

    while len(tokens) < target_size:
        pair_counts: Counter = Counter()
        for symbols, count in work:
            for i in range(len(symbols) - 1):
                pair_counts[(symbols[i], symbols[i + 1])] += count
        if not pair_counts:
            break
        best = min(pair_counts.items(), key=lambda kv: (-kv[1], kv[0]))[0]
        merges.append(best)
        merged = best[0] + best[1]
        next_work = []
        for symbols, count in work:
            i = 0
            while i < len(symbols) - 1:
                if symbols[i] == best[0] and symbols[i + 1] == best[1]:
                    symbols[i:i + 2] = [merged]
                else:
                    i += 1
            if len(symbols) > 1:
                next_work.append((symbols, count))
        work = next_work
        if merged not in known:
            known.add(merged)
            tokens.append(merged)

    return Vocab(tokens=tokens, merges=merges, specials=frozenset(special_list))


def encode(word: str, vocab: Vocab) -> list[int]:
    """Character split followed by merges applied in rank order.

    Specials encode to their single id; characters outside the trained
    alphabet become the ⟨UNK⟩ id."""
    if word in vocab.specials:
        return [vocab.id_of[word]]
    if not word:
        return []
    symbols = [ch if ch in vocab.id_of else UNK for ch in word]
    ranks = vocab._ranks
    while len(symbols) > 1:
        best_rank = None
        for i in range(len(symbols) - 1):
            rank = ranks.get((symbols[i], symbols[i + 1]))
            if rank is not None and (best_rank is None or rank < best_rank):
                best_rank = rank
        if best_rank is None:
            break
        left, right = vocab.merges[best_rank]
        merged = left + right
        i = 0
        while i < len(symbols) - 1:
            if symbols[i] == left and symbols[i + 1] == right:
                symbols[i:i + 2] = [merged]
            else:
                i += 1
    return [vocab.id_of[s] for s in symbols]


def decode(ids: list[int], vocab: Vocab) -> str:
    """Concatenation of token strings; inverse of encode for UNK-free words."""
    out = []
    for i in ids:
        if not 0 <= i < len(vocab.tokens):
            raise VocabError("token id %d out of range [0, %d)" % (i, len(vocab.tokens)))
        out.append(vocab.tokens[i])
    return "".join(out)


class Encoder:
    """Per-word memoizing wrapper around encode(); safe because the vocab is
    immutable once trained."""

    def __init__(self, vocab: Vocab):
        self.vocab = vocab
        self._cache: dict[str, list[int]] = {}

    def __call__(self, word: str) -> list[int]:
        hit = self._cache.get(word)
        if hit is None:
            hit = self._cache[word] = encode(word, self.vocab)
        return list(hit)
