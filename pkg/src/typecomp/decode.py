"""Next-token and line-level generation.

Six decoding methods: greedy, beam search, plain sampling, temperature
sampling, top-k and top-p (nucleus). Beam scoring uses raw cumulative log
probability with no length normalization; beams that emitted the
end-of-line token are preferred over unfinished ones. During generation the
context keeps its trailing block_size - max_new ids, reserving room for the
tokens still to come.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bpe import Vocab, decode as bpe_decode, encode as bpe_encode
from .corpus import EOL_MARK
from .errors import ConfigError
from .lexer import TokenType, is_keyword, lex_typed

METHODS = ("greedy", "beam", "sample", "temperature", "top_k", "top_p")
MIN_TEMP = 1e-4


@dataclass
class DecodeConfig:
    method: str = "greedy"
    b: int = 5
    temp: float = 1.0
    k: int = 5
    p: float = 0.9
    seed: int = 0
    max_new: int = 100

    def __post_init__(self):
        if self.method not in METHODS:
            raise ConfigError("unknown decoding method %r" % self.method)
        if self.max_new < 1:
            raise ConfigError("max_new must be >= 1")
        if self.method == "beam" and self.b < 1:
            raise ConfigError("beam size must be >= 1")
        if self.method == "temperature" and not 0.0 < self.temp <= 1.0:
            raise ConfigError("temperature must be in (0, 1]")
        if self.method == "top_k" and self.k < 1:
            raise ConfigError("top-k must be >= 1")
        if self.method == "top_p" and not 0.0 < self.p <= 1.0:
            raise ConfigError("top-p must be in (0, 1]")


@dataclass
class Candidate:
    ids: tuple[int, ...]       # newly generated ids (context excluded)
    logprob: float             # sum of per-step log probabilities
    finished: bool = False     # emitted the end-of-line token

    def sort_key(self) -> tuple:
        return (-self.logprob, self.ids)


def next_distribution(model, ctx_ids, reserve: int = 0) -> np.ndarray:
    """Probability vector over the vocabulary for the next token.

    Over-long contexts keep their trailing block_size - reserve ids."""
    ctx = list(ctx_ids)
    if not ctx:
        raise ConfigError("empty context")
    window = model.config.block_size - reserve
    if window < 1:
        window = 1
    if len(ctx) > window:
        ctx = ctx[-window:]
    logits = model.forward(ctx).data[-1].astype(np.float64)
    shifted = logits - logits.max()
    e = np.exp(shifted)
    return e / e.sum()


def _sample_index(probs: np.ndarray, rng: np.random.Generator) -> int:
    cum = np.cumsum(probs)
    cum[-1] = 1.0
    return int(np.searchsorted(cum, rng.random(), side="right"))


def _desc_order(dist: np.ndarray) -> np.ndarray:
    """Vocabulary ids sorted by descending probability, ties by lower id."""
    return np.lexsort((np.arange(len(dist)), -dist))


def nucleus_set(dist: np.ndarray, p: float) -> np.ndarray:
    """The smallest prefix of the probability-sorted vocabulary whose
    cumulative probability reaches p."""
    order = _desc_order(dist)
    cum = np.cumsum(dist[order])
    cut = int(np.searchsorted(cum, p, side="left"))
    if cut >= len(order):
        cut = len(order) - 1
    return order[:cut + 1]


def pick(dist: np.ndarray, cfg: DecodeConfig,
         rng: np.random.Generator | None = None) -> int:
    """Select one token id from a probability vector."""
    dist = np.asarray(dist, dtype=np.float64)
    if cfg.method == "greedy":
        return int(np.argmax(dist))
    if rng is None:
        rng = np.random.default_rng(cfg.seed)
    if cfg.method == "sample":
        return _sample_index(dist / dist.sum(), rng)
    if cfg.method == "temperature":
        temp = max(cfg.temp, MIN_TEMP)
        with np.errstate(divide="ignore"):
            z = np.log(dist) / temp
        z -= z.max()
        w = np.exp(z)
        return _sample_index(w / w.sum(), rng)
    if cfg.method == "top_k":
        order = _desc_order(dist)[:cfg.k]
        w = dist[order]
        return int(order[_sample_index(w / w.sum(), rng)])
    if cfg.method == "top_p":
        keep = nucleus_set(dist, cfg.p)
        w = dist[keep]
        return int(keep[_sample_index(w / w.sum(), rng)])
    raise ConfigError("unknown decoding method %r" % cfg.method)


def beam_search(model, ctx_ids, cfg: DecodeConfig, eol_id: int) -> Candidate:
    """Width-b search over next-token continuations.

    Every live candidate expands by the full vocabulary; the pool keeps the
    top b by cumulative log probability. Candidates emitting the end-of-line
    token move to a finished pool. Search stops when no live candidates
    remain or max_new steps were taken; the best finished candidate wins,
    with unfinished ones as fallback. Ties break by lexicographic id order.
    """
    ctx = list(ctx_ids)
    live = [Candidate(ids=(), logprob=0.0)]
    finished: list[Candidate] = []
    for _ in range(cfg.max_new):
        pool: list[Candidate] = []
        for cand in live:
            dist = next_distribution(model, ctx + list(cand.ids),
                                     reserve=cfg.max_new)
            with np.errstate(divide="ignore"):
                logp = np.log(dist)
            # only a candidate's own top-b expansions can reach the global
            # top-b, so the pool stays at most b*b entries
            for v in _desc_order(logp)[:cfg.b]:
                v = int(v)
                pool.append(Candidate(ids=cand.ids + (v,),
                                      logprob=cand.logprob + float(logp[v]),
                                      finished=(v == eol_id)))
        pool.sort(key=Candidate.sort_key)
        top = pool[:cfg.b]
        live = [c for c in top if not c.finished]
        finished.extend(c for c in top if c.finished)
        if not live:
            break
    chosen = finished if finished else live
    return min(chosen, key=Candidate.sort_key)


def rollout(model, ctx_ids, cfg: DecodeConfig, eol_id: int,
            rng: np.random.Generator | None = None) -> Candidate:
    """Iterative generation with any non-beam method: append one picked id at
    a time, stop at the end-of-line token (excluded) or after max_new ids."""
    ctx = list(ctx_ids)
    if rng is None:
        rng = np.random.default_rng(cfg.seed)
    ids: list[int] = []
    logprob = 0.0
    for _ in range(cfg.max_new):
        dist = next_distribution(model, ctx + ids, reserve=cfg.max_new)
        token = pick(dist, cfg, rng)
        logprob += float(np.log(dist[token])) if dist[token] > 0 else -np.inf
        if token == eol_id:
            return Candidate(tuple(ids), logprob, finished=True)
        ids.append(token)
    return Candidate(tuple(ids), logprob, finished=False)


def generate_ids(model, ctx_ids, cfg: DecodeConfig, eol_id: int,
                 rng: np.random.Generator | None = None) -> list[int]:
    """Generated ids for one completion, end-of-line token excluded."""
    if cfg.method == "beam":
        cand = beam_search(model, ctx_ids, cfg, eol_id)
        ids = list(cand.ids)
        if ids and ids[-1] == eol_id:
            ids.pop()
        return ids
    return list(rollout(model, ctx_ids, cfg, eol_id, rng).ids)


def topk_ranks(model, ctx_ids, r: int = 5) -> list[int]:
    """The r highest-probability next tokens in descending probability,
    deterministic tie-break by id."""
    if r < 1:
        raise ConfigError("rank list size must be >= 1")
    dist = next_distribution(model, ctx_ids)
    return [int(i) for i in _desc_order(dist)[:r]]


def completion_text(ids: list[int], vocab: Vocab) -> str:
    """Raw detokenization: concatenated token strings, no spaces. Line-level
    comparisons use this form on both sides, so they need no word-boundary
    recovery."""
    return bpe_decode(ids, vocab)


def _lexes_as_one_token(text: str) -> bool:
    toks = [t for t in lex_typed(text) if t.ttype is not TokenType.EOL]
    return (len(toks) == 1
            and toks[0].ttype is not TokenType.ERRORTOKEN
            and toks[0].text == text)


def words_from_ids(ids: list[int], vocab: Vocab) -> list[str]:
    """Regroup generated subword ids into words for display.

    Specials always stand alone, and so do reserved words (a keyword is
    always a complete source token). A non-special subword extends the
    current word only while (a) the grown sequence is still the canonical
    encoding of its concatenated text and (b) that text still lexes as a
    single source token; anywhere that breaks, a word boundary is placed.
    Word-internal BPE keeps no boundary marker in the id stream, so adjacent
    same-class words (two plain names, say) can still regroup as one."""
    words: list[str] = []
    current: list[int] = []

    def flush() -> None:
        if current:
            words.append(bpe_decode(current, vocab))
            current.clear()

    for tid in ids:
        tok = vocab.tokens[tid]
        if tok in vocab.specials:
            flush()
            words.append(tok)
            continue
        if current:
            if is_keyword(bpe_decode(current, vocab)) or is_keyword(tok):
                flush()
            else:
                candidate = current + [tid]
                text = bpe_decode(candidate, vocab)
                if (bpe_encode(text, vocab) == candidate
                        and _lexes_as_one_token(text)):
                    current.append(tid)
                    continue
                flush()
        current.append(tid)
    flush()
    return words


def complete_line(model, ctx_ids, cfg: DecodeConfig, vocab: Vocab,
                  rng: np.random.Generator | None = None) -> str:
    """Generate until the end-of-line token (excluded) or max_new ids, then
    return the space-joined word string."""
    eol_id = vocab.id_of[EOL_MARK]
    ids = generate_ids(model, ctx_ids, cfg, eol_id, rng)
    return " ".join(words_from_ids(ids, vocab))
