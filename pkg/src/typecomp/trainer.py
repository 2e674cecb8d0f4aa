"""Training loops: hard parameter sharing, soft parameter sharing with a
parameter-distance coupling, intermediate fine-tuning, and the AdamW update.

Every task owns rng streams derived from (seed, role), so dropping a
zero-weighted task leaves the surviving task's trajectory bit-identical to
single-task training.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from . import autodiff as ad
from .autodiff import Tensor
from .errors import ConfigError
from .model import Model, lm_loss

ADAM_BETA1 = 0.9
ADAM_BETA2 = 0.999
ADAM_EPS = 1e-8
SHARING_EPS = 1e-12

_ROLE_IDS = {"code": 0, "type": 1}


@dataclass
class TaskWeights:
    alpha_type: float
    alpha_code: float

    def __post_init__(self):
        if self.alpha_type < 0 or self.alpha_code < 0:
            raise ConfigError("task weights must be non-negative")
        if self.alpha_type == 0 and self.alpha_code == 0:
            raise ConfigError("task weights must not both be zero")

    @classmethod
    def from_ratio(cls, spec: str) -> "TaskWeights":
        """Parse "a:b" (type:code, normalized to sum 1) or "no-weight" (1,1)."""
        text = spec.strip().lower().replace(" ", "")
        if text in ("no-weight", "noweight", "none"):
            return cls(1.0, 1.0)
        try:
            a, b = (float(part) for part in text.split(":"))
        except ValueError:
            raise ConfigError("bad weight ratio %r" % spec) from None
        if a + b <= 0:
            raise ConfigError("weight ratio %r sums to zero" % spec)
        return cls(a / (a + b), b / (a + b))


@dataclass
class TrainConfig:
    learning_rate: float = 8e-5
    weight_decay: float = 0.01
    batch_size: int = 2
    grad_accum_steps: int = 4
    max_steps: int = 100
    seed: int = 0

    def __post_init__(self):
        if (self.learning_rate <= 0 or self.weight_decay < 0
                or self.batch_size < 1 or self.grad_accum_steps < 1
                or self.max_steps < 1):
            raise ConfigError("invalid training configuration: %r" % (self,))


class CorpusStream:
    """Deterministic batch source over id sequences for one task role."""

    def __init__(self, role: str, sequences: list[list[int]]):
        if role not in _ROLE_IDS:
            raise ConfigError("unknown stream role %r" % role)
        self.role = role
        self.sequences = [s for s in sequences if len(s) >= 2]

    def __len__(self) -> int:
        return len(self.sequences)

    def batches(self, batch_size: int, seed: int) -> Iterator[list[list[int]]]:
        if not self.sequences:
            raise ConfigError("empty %s stream" % self.role)
        rng = np.random.default_rng([seed, _ROLE_IDS[self.role]])
        n = len(self.sequences)
        while True:
            idx = rng.integers(0, n, size=batch_size)
            yield [self.sequences[int(i)] for i in idx]

    def dropout_rng(self, seed: int) -> np.random.Generator:
        return np.random.default_rng([seed, _ROLE_IDS[self.role], 7])


@dataclass
class AdamState:
    step: int = 0
    m: list[np.ndarray] = field(default_factory=list)
    v: list[np.ndarray] = field(default_factory=list)

    @classmethod
    def init_like(cls, params: list[Tensor]) -> "AdamState":
        return cls(step=0,
                   m=[np.zeros_like(p.data) for p in params],
                   v=[np.zeros_like(p.data) for p in params])


def adam_step(params: list[Tensor], grads: list[np.ndarray | None],
              state: AdamState, cfg: TrainConfig) -> None:
    """One AdamW update: bias-corrected moments plus decoupled weight decay."""
    state.step += 1
    t = state.step
    lr, wd = cfg.learning_rate, cfg.weight_decay
    c1 = 1.0 - ADAM_BETA1 ** t
    c2 = 1.0 - ADAM_BETA2 ** t
    for p, g, m, v in zip(params, grads, state.m, state.v):
        if g is None:
            g = np.zeros_like(p.data)
        m *= ADAM_BETA1
        m += (1.0 - ADAM_BETA1) * g
        v *= ADAM_BETA2
        v += (1.0 - ADAM_BETA2) * (g * g)
        if wd:
            p.data *= (1.0 - lr * wd)
        p.data -= lr * (m / c1) / (np.sqrt(v / c2) + ADAM_EPS)


def sharing_loss(params_a: list[Tensor], params_b: list[Tensor]) -> Tensor:
    """Euclidean distance between two parameter sets (epsilon-smoothed at
    zero so the gradient stays finite)."""
    return ad.params_distance(params_a, params_b, eps=SHARING_EPS)


@dataclass
class _Task:
    role: str
    batches: Iterator[list[list[int]]]
    alpha: float
    drop_rng: np.random.Generator


def _batch_loss(model: Model, batch: list[list[int]],
                drop_rng: np.random.Generator) -> Tensor:
    train = model.config.dropout > 0.0
    inv = 1.0 / len(batch)
    total = None
    for seq in batch:
        part = ad.scale(lm_loss(model, seq, train=train, rng=drop_rng), inv)
        total = part if total is None else ad.add(total, part)
    return total


def _make_tasks(streams: list[tuple[str, CorpusStream, float]],
                cfg: TrainConfig) -> list[_Task]:
    tasks = []
    for role, stream, alpha in streams:
        if len(stream) == 0:
            raise ConfigError("empty %s stream" % role)
        if alpha == 0.0:
            continue  # zero weight contributes no gradient: skip entirely
        tasks.append(_Task(role, stream.batches(cfg.batch_size, cfg.seed),
                           alpha, stream.dropout_rng(cfg.seed)))
    return tasks


def _run_steps(model: Model, tasks: list[_Task], cfg: TrainConfig,
               history: list[dict], start_step: int = 0) -> AdamState:
    params = model.param_list()
    state = AdamState.init_like(params)
    ga = cfg.grad_accum_steps
    for step in range(start_step + 1, start_step + cfg.max_steps + 1):
        for p in params:
            p.zero_grad()
        sums: dict[str, float] = {}
        for _ in range(ga):
            parts = []
            for task in tasks:
                batch = next(task.batches)
                loss = _batch_loss(model, batch, task.drop_rng)
                sums[task.role] = sums.get(task.role, 0.0) + loss.item()
                parts.append(ad.scale(loss, task.alpha / ga))
            total = parts[0]
            for part in parts[1:]:
                total = ad.add(total, part)
            ad.backward(total)
        adam_step(params, [p.grad for p in params], state, cfg)
        row = {"step": step}
        for key, val in sums.items():
            row["l_" + key] = val / ga
        history.append(row)
    return state


def train_single(model: Model, stream: CorpusStream, cfg: TrainConfig,
                 history: list[dict] | None = None,
                 start_step: int = 0) -> tuple[Model, list[dict]]:
    """Plain causal-LM training on one stream."""
    history = history if history is not None else []
    tasks = _make_tasks([(stream.role, stream, 1.0)], cfg)
    _run_steps(model, tasks, cfg, history, start_step=start_step)
    return model, history


def train_hard(model: Model, d_code: CorpusStream, d_type: CorpusStream,
               weights: TaskWeights, cfg: TrainConfig,
               ) -> tuple[Model, list[dict]]:
    """Hard parameter sharing: one model, per-step sum of weighted task
    losses, one AdamW update per accumulated step."""
    history: list[dict] = []
    tasks = _make_tasks([("code", d_code, weights.alpha_code),
                         ("type", d_type, weights.alpha_type)], cfg)
    _run_steps(model, tasks, cfg, history)
    return model, history


def train_soft(model_code: Model, model_type: Model, d_code: CorpusStream,
               d_type: CorpusStream, weights: TaskWeights, cfg: TrainConfig,
               ) -> tuple[Model, Model, list[dict]]:
    """Soft parameter sharing: per-task models coupled by the parameter
    distance; inference uses model_code only."""
    if model_code.config != model_type.config:
        raise ConfigError("soft sharing needs identical model configs")
    history: list[dict] = []
    code_tasks = _make_tasks([("code", d_code, weights.alpha_code)], cfg)
    type_tasks = _make_tasks([("type", d_type, weights.alpha_type)], cfg)

    params_code = model_code.param_list()
    params_type = model_type.param_list()
    all_params = params_code + params_type
    state = AdamState.init_like(all_params)
    ga = cfg.grad_accum_steps

    for step in range(1, cfg.max_steps + 1):
        for p in all_params:
            p.zero_grad()
        sums: dict[str, float] = {}
        for _ in range(ga):
            parts = []
            for model, tasks in ((model_code, code_tasks),
                                 (model_type, type_tasks)):
                for task in tasks:
                    batch = next(task.batches)
                    loss = _batch_loss(model, batch, task.drop_rng)
                    sums[task.role] = sums.get(task.role, 0.0) + loss.item()
                    parts.append(ad.scale(loss, task.alpha / ga))
            share = sharing_loss(params_type, params_code)
            sums["sharing"] = sums.get("sharing", 0.0) + share.item()
            parts.append(ad.scale(share, 1.0 / ga))
            total = parts[0]
            for part in parts[1:]:
                total = ad.add(total, part)
            ad.backward(total)
        adam_step(all_params, [p.grad for p in all_params], state, cfg)
        row = {"step": step}
        for key, val in sums.items():
            row["l_" + key] = val / ga
        history.append(row)
    return model_code, model_type, history


def train_ift(model: Model, d_type: CorpusStream, d_code: CorpusStream,
              cfg: TrainConfig,
              checkpoint_cb: Callable[[Model, int], None] | None = None,
              ) -> tuple[Model, list[dict]]:
    """Intermediate fine-tuning: single-task training on the type stream for
    half the steps, then on the code stream; the optimizer restarts at the
    phase boundary and a checkpoint callback fires between phases."""
    phase1 = cfg.max_steps // 2
    phase2 = cfg.max_steps - phase1
    history: list[dict] = []
    if phase1 > 0:
        cfg1 = TrainConfig(cfg.learning_rate, cfg.weight_decay,
                           cfg.batch_size, cfg.grad_accum_steps,
                           phase1, cfg.seed)
        train_single(model, d_type, cfg1, history=history)
    if checkpoint_cb is not None:
        checkpoint_cb(model, phase1)
    if phase2 > 0:
        cfg2 = TrainConfig(cfg.learning_rate, cfg.weight_decay,
                           cfg.batch_size, cfg.grad_accum_steps,
                           phase2, cfg.seed)
        train_single(model, d_code, cfg2, history=history, start_step=phase1)
    return model, history


def parameter_distance(model_a: Model, model_b: Model) -> float:
    """Current coupling distance, measured without building a graph."""
    total = 0.0
    for a, b in zip(model_a.param_list(), model_b.param_list()):
        diff = a.data.astype(np.float64) - b.data.astype(np.float64)
        total += float((diff * diff).sum())
    return float(np.sqrt(total + SHARING_EPS))
