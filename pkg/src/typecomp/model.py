"""Decoder-only transformer with causal masking and a tied output head.

Pre-norm residual blocks: each layer applies layer-norm, masked multi-head
self-attention and a residual add, then layer-norm, a 4x feed-forward with
GELU and another residual add. A final layer-norm feeds the tied head
(logits = h @ We^T). Code tokens and type special tokens share one vocabulary
and one embedding matrix.
"""
from __future__ import annotations

import json
import math
import struct
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from . import autodiff as ad
from .autodiff import Tensor
from .errors import ConfigError, ContractError

CHECKPOINT_MAGIC = b"SAOTF1"


@dataclass
class ModelConfig:
    n_layer: int = 4
    n_head: int = 4
    n_embd: int = 128
    block_size: int = 256
    vocab_size: int = 4096
    dropout: float = 0.1

    def __post_init__(self):
        if self.n_embd % self.n_head != 0:
            raise ConfigError("n_embd %d not divisible by n_head %d"
                              % (self.n_embd, self.n_head))
        if self.block_size < 2:
            raise ConfigError("block_size must be >= 2")
        if not 0.0 <= self.dropout < 1.0:
            raise ConfigError("dropout must be in [0, 1)")

    @property
    def head_dim(self) -> int:
        return self.n_embd // self.n_head


class Model:
    """Parameter container plus forward pass. Evaluation is read-only and may
    run concurrently; training mutates parameters and must be exclusive."""

    def __init__(self, config: ModelConfig, params: dict[str, Tensor]):
        self.config = config
        self.params = params

    # -- construction --------------------------------------------------------

    @classmethod
    def init(cls, config: ModelConfig, seed: int, dtype=np.float32) -> "Model":
        rng = np.random.default_rng(seed)
        params: dict[str, Tensor] = {}

        def weight(name: str, shape: tuple[int, ...]) -> None:
            params[name] = Tensor(rng.normal(0.0, 0.02, size=shape),
                                  requires_grad=True, dtype=dtype)

        def fill(name: str, shape: tuple[int, ...], value: float) -> None:
            params[name] = Tensor(np.full(shape, value),
                                  requires_grad=True, dtype=dtype)

        c = config
        weight("wte", (c.vocab_size, c.n_embd))
        weight("wpe", (c.block_size, c.n_embd))
        for i in range(c.n_layer):
            p = f"layers.{i}."
            fill(p + "ln1.scale", (c.n_embd,), 1.0)
            fill(p + "ln1.shift", (c.n_embd,), 0.0)
            for h in range(c.n_head):
                hp = p + f"attn.head{h}."
                weight(hp + "wq", (c.n_embd, c.head_dim))
                fill(hp + "bq", (c.head_dim,), 0.0)
                weight(hp + "wk", (c.n_embd, c.head_dim))
                fill(hp + "bk", (c.head_dim,), 0.0)
                weight(hp + "wv", (c.n_embd, c.head_dim))
                fill(hp + "bv", (c.head_dim,), 0.0)
            weight(p + "attn.out.w", (c.n_embd, c.n_embd))
            fill(p + "attn.out.b", (c.n_embd,), 0.0)
            fill(p + "ln2.scale", (c.n_embd,), 1.0)
            fill(p + "ln2.shift", (c.n_embd,), 0.0)
            weight(p + "ffn.w1", (c.n_embd, 4 * c.n_embd))
            fill(p + "ffn.b1", (4 * c.n_embd,), 0.0)
            weight(p + "ffn.w2", (4 * c.n_embd, c.n_embd))
            fill(p + "ffn.b2", (c.n_embd,), 0.0)
        fill("ln_f.scale", (c.n_embd,), 1.0)
        fill("ln_f.shift", (c.n_embd,), 0.0)
        return cls(config, params)

    def param_names(self) -> list[str]:
        return list(self.params)

    def param_list(self) -> list[Tensor]:
        return list(self.params.values())

    def count_params(self) -> int:
        return sum(p.data.size for p in self.params.values())

    def zero_grads(self) -> None:
        for p in self.params.values():
            p.zero_grad()

    # -- forward -------------------------------------------------------------

    def _dropout(self, x: Tensor, train: bool,
                 rng: np.random.Generator | None) -> Tensor:
        p = self.config.dropout
        if not train or p <= 0.0:
            return x
        if rng is None:
            raise ContractError("training forward with dropout needs an rng")
        keep = (rng.random(x.shape) >= p).astype(x.data.dtype) / (1.0 - p)
        return ad.hadamard(x, keep)

    def forward(self, ids, train: bool = False,
                rng: np.random.Generator | None = None) -> Tensor:
        """Logits [T, vocab_size] for a context of T ids."""
        ids = np.asarray(ids, dtype=np.int64)
        t = len(ids)
        c = self.config
        if t < 1:
            raise ContractError("forward needs at least one id")
        if t > c.block_size:
            raise ContractError("context length %d exceeds block size %d"
                                % (t, c.block_size))
        if ids.min() < 0 or ids.max() >= c.vocab_size:
            raise ContractError("token id out of range [0, %d)" % c.vocab_size)

        P = self.params
        x = ad.add(ad.embedding_lookup(P["wte"], ids),
                   ad.embedding_lookup(P["wpe"], np.arange(t)))
        x = self._dropout(x, train, rng)
        mask = np.triu(np.ones((t, t), dtype=bool), k=1)
        inv_sqrt_hd = 1.0 / math.sqrt(c.head_dim)

        for i in range(c.n_layer):
            p = f"layers.{i}."
            h = ad.layer_norm(x, P[p + "ln1.scale"], P[p + "ln1.shift"])
            head_cols = []
            for hN in range(c.n_head):
                hp = p + f"attn.head{hN}."
                q = ad.add(ad.matmul(h, P[hp + "wq"]), P[hp + "bq"])
                k = ad.add(ad.matmul(h, P[hp + "wk"]), P[hp + "bk"])
                v = ad.add(ad.matmul(h, P[hp + "wv"]), P[hp + "bv"])
                scores = ad.scale(ad.matmul(q, ad.transpose(k)), inv_sqrt_hd)
                scores = ad.masked_fill(scores, mask, -1e9)
                att = ad.softmax(scores)
                head_cols.append(ad.transpose(ad.matmul(att, v)))
            merged = ad.transpose(ad.concat_rows(head_cols))
            proj = ad.add(ad.matmul(merged, P[p + "attn.out.w"]),
                          P[p + "attn.out.b"])
            x = ad.add(x, self._dropout(proj, train, rng))

            f = ad.layer_norm(x, P[p + "ln2.scale"], P[p + "ln2.shift"])
            f = ad.gelu(ad.add(ad.matmul(f, P[p + "ffn.w1"]), P[p + "ffn.b1"]))
            f = ad.add(ad.matmul(f, P[p + "ffn.w2"]), P[p + "ffn.b2"])
            x = ad.add(x, self._dropout(f, train, rng))

        x = ad.layer_norm(x, P["ln_f.scale"], P["ln_f.shift"])
        return ad.matmul(x, ad.transpose(P["wte"]))


def lm_loss(model: Model, ids, train: bool = False,
            rng: np.random.Generator | None = None) -> Tensor:
    """Mean negative log-likelihood of ids[1:] given their prefixes."""
    ids = np.asarray(ids, dtype=np.int64)
    if len(ids) < 2:
        raise ContractError("lm_loss needs at least two ids")
    logits = model.forward(ids[:-1], train=train, rng=rng)
    return ad.cross_entropy(logits, ids[1:])


def expected_param_count(c: ModelConfig) -> int:
    """Closed-form parameter count for cross-checking init()."""
    e, v, b = c.n_embd, c.vocab_size, c.block_size
    per_layer = (2 * e                       # ln1
                 + 3 * (e * e + e)           # q,k,v across heads
                 + e * e + e                 # attention output projection
                 + 2 * e                     # ln2
                 + e * 4 * e + 4 * e         # ffn in
                 + 4 * e * e + e)            # ffn out
    return v * e + b * e + c.n_layer * per_layer + 2 * e


# -- checkpoints --------------------------------------------------------------

def save_checkpoint(model: Model, path: Path, step: int, seed: int,
                    vocab_hash: str) -> None:
    """Versioned checkpoint: magic, JSON header, then float32 LE payloads in
    declared parameter-name order."""
    from . import __version__

    names = model.param_names()
    header = {
        "config": asdict(model.config),
        "vocab_hash": vocab_hash,
        "step": step,
        "seed": seed,
        "tool_version": __version__,
        "params": [{"name": n, "shape": list(model.params[n].shape)}
                   for n in names],
    }
    blob = json.dumps(header, sort_keys=True).encode("utf-8")
    with open(path, "wb") as fh:
        fh.write(CHECKPOINT_MAGIC)
        fh.write(struct.pack("<I", len(blob)))
        fh.write(blob)
        for name in names:
            fh.write(np.ascontiguousarray(
                model.params[name].data, dtype="<f4").tobytes())


def load_checkpoint(path: Path, dtype=np.float32) -> tuple[Model, dict]:
    data = Path(path).read_bytes()
    if data[:len(CHECKPOINT_MAGIC)] != CHECKPOINT_MAGIC:
        raise ConfigError("%s: not a checkpoint (bad magic)" % path)
    off = len(CHECKPOINT_MAGIC)
    (hlen,) = struct.unpack_from("<I", data, off)
    off += 4
    header = json.loads(data[off:off + hlen].decode("utf-8"))
    off += hlen
    config = ModelConfig(**header["config"])
    params: dict[str, Tensor] = {}
    for spec in header["params"]:
        shape = tuple(spec["shape"])
        size = int(np.prod(shape)) if shape else 1
        arr = np.frombuffer(data, dtype="<f4", count=size, offset=off)
        off += 4 * size
        params[spec["name"]] = Tensor(arr.reshape(shape).copy(),
                                      requires_grad=True, dtype=dtype)
    if off != len(data):
        raise ConfigError("%s: trailing bytes after parameter payload" % path)
    return Model(config, params), header
