"""Minimal reverse-mode automatic differentiation over dense numpy tensors.

Tensors form an implicit acyclic graph through their parent links; calling
backward() on a scalar loss topologically sorts that graph and applies each
op's vector-Jacobian product in reverse, accumulating into .grad buffers
across fan-out. Compute is float32 by default; gradient checking runs the
same graph in float64.
"""
from __future__ import annotations

import math
from typing import Callable, Sequence

import numpy as np

from .errors import ContractError, ShapeError

DEFAULT_DTYPE = np.float32


class Tensor:
    __slots__ = ("data", "grad", "requires_grad", "_parents", "_vjp")

    def __init__(self, data, requires_grad: bool = False, dtype=None):
        self.data = np.asarray(data, dtype=dtype if dtype is not None else DEFAULT_DTYPE)
        self.grad: np.ndarray | None = None
        self.requires_grad = requires_grad
        self._parents: tuple[Tensor, ...] = ()
        self._vjp: Callable[[np.ndarray], None] | None = None

    @property
    def shape(self) -> tuple[int, ...]:
        return self.data.shape

    @property
    def dtype(self):
        return self.data.dtype

    def zero_grad(self) -> None:
        self.grad = None

    def accumulate(self, grad: np.ndarray) -> None:
        if self.grad is None:
            self.grad = np.zeros_like(self.data)
        self.grad += grad

    def item(self) -> float:
        return float(self.data.reshape(()).item())

    def __repr__(self) -> str:
        return f"Tensor(shape={self.shape}, dtype={self.data.dtype})"


def _result(data: np.ndarray, parents: Sequence[Tensor],
            vjp: Callable[[np.ndarray], None]) -> Tensor:
    out = Tensor.__new__(Tensor)
    out.data = data
    out.grad = None
    out.requires_grad = any(p.requires_grad for p in parents)
    out._parents = tuple(parents)
    out._vjp = vjp if out.requires_grad else None
    return out


def _unbroadcast(grad: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    """Sum grad down to shape (inverse of numpy broadcasting)."""
    extra = grad.ndim - len(shape)
    if extra > 0:
        grad = grad.sum(axis=tuple(range(extra)))
    axes = tuple(i for i, n in enumerate(shape) if n == 1 and grad.shape[i] != 1)
    if axes:
        grad = grad.sum(axis=axes, keepdims=True)
    return grad


def backward(loss: Tensor) -> None:
    """Populate .grad buffers of every tensor the scalar loss depends on."""
    if loss.data.size != 1:
        raise ContractError("backward needs a scalar loss, got shape %r"
                            % (loss.shape,))
    topo: list[Tensor] = []
    seen: set[int] = set()
    stack: list[tuple[Tensor, bool]] = [(loss, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            topo.append(node)
            continue
        if id(node) in seen or not node.requires_grad:
            continue
        seen.add(id(node))
        stack.append((node, True))
        for parent in node._parents:
            stack.append((parent, False))
    loss.accumulate(np.ones_like(loss.data))
    for node in reversed(topo):
        if node._vjp is not None and node.grad is not None:
            node._vjp(node.grad)


# --- ops -------------------------------------------------------------------

def matmul(a: Tensor, b: Tensor) -> Tensor:
    if a.data.ndim != 2 or b.data.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ShapeError("matmul shapes incompatible: %r @ %r"
                         % (a.shape, b.shape))
    out_data = a.data @ b.data

    def vjp(g: np.ndarray) -> None:
        if a.requires_grad:
            a.accumulate(g @ b.data.T)
        if b.requires_grad:
            b.accumulate(a.data.T @ g)
    return _result(out_data, (a, b), vjp)


def add(a: Tensor, b: Tensor) -> Tensor:
    try:
        out_data = a.data + b.data
    except ValueError:
        raise ShapeError("add shapes incompatible: %r + %r"
                         % (a.shape, b.shape)) from None

    def vjp(g: np.ndarray) -> None:
        if a.requires_grad:
            a.accumulate(_unbroadcast(g, a.shape))
        if b.requires_grad:
            b.accumulate(_unbroadcast(g, b.shape))
    return _result(out_data, (a, b), vjp)


_GELU_C = math.sqrt(2.0 / math.pi)


def gelu(x: Tensor) -> Tensor:
    """tanh-approximation GELU."""
    xd = x.data
    inner = _GELU_C * (xd + 0.044715 * xd ** 3)
    t = np.tanh(inner)
    out_data = 0.5 * xd * (1.0 + t)

    def vjp(g: np.ndarray) -> None:
        if x.requires_grad:
            d_inner = _GELU_C * (1.0 + 3 * 0.044715 * xd ** 2)
            dx = 0.5 * (1.0 + t) + 0.5 * xd * (1.0 - t ** 2) * d_inner
            x.accumulate(g * dx)
    return _result(out_data, (x,), vjp)


def softmax(x: Tensor) -> Tensor:
    """Softmax over the last dimension, max-subtracted for stability."""
    shifted = x.data - x.data.max(axis=-1, keepdims=True)
    e = np.exp(shifted)
    s = e / e.sum(axis=-1, keepdims=True)

    def vjp(g: np.ndarray) -> None:
        if x.requires_grad:
            dot = (g * s).sum(axis=-1, keepdims=True)
            x.accumulate(s * (g - dot))
    return _result(s, (x,), vjp)


def layer_norm(x: Tensor, scale: Tensor, shift: Tensor,
               eps: float = 1e-5) -> Tensor:
    """Normalization over the last dimension with learned scale/shift."""
    n = x.shape[-1]
    if scale.shape != (n,) or shift.shape != (n,):
        raise ShapeError("layer_norm params %r/%r do not match feature dim %d"
                         % (scale.shape, shift.shape, n))
    mu = x.data.mean(axis=-1, keepdims=True)
    centered = x.data - mu
    var = (centered ** 2).mean(axis=-1, keepdims=True)
    inv_std = 1.0 / np.sqrt(var + eps)
    xhat = centered * inv_std
    out_data = xhat * scale.data + shift.data

    def vjp(g: np.ndarray) -> None:
        if scale.requires_grad:
            scale.accumulate((g * xhat).reshape(-1, n).sum(axis=0))
        if shift.requires_grad:
            shift.accumulate(g.reshape(-1, n).sum(axis=0))
        if x.requires_grad:
            gx = g * scale.data
            term = gx - gx.mean(axis=-1, keepdims=True) \
                - xhat * (gx * xhat).mean(axis=-1, keepdims=True)
            x.accumulate(term * inv_std)
    return _result(out_data, (x, scale, shift), vjp)


def embedding_lookup(table: Tensor, ids) -> Tensor:
    ids = np.asarray(ids, dtype=np.int64)
    if table.data.ndim != 2:
        raise ShapeError("embedding table must be 2-D, got %r" % (table.shape,))
    if ids.size and (ids.min() < 0 or ids.max() >= table.shape[0]):
        raise ContractError("embedding id out of range [0, %d)" % table.shape[0])
    out_data = table.data[ids]

    def vjp(g: np.ndarray) -> None:
        if table.requires_grad:
            if table.grad is None:
                table.grad = np.zeros_like(table.data)
            np.add.at(table.grad, ids, g)
    return _result(out_data, (table,), vjp)


def cross_entropy(logits: Tensor, targets) -> Tensor:
    """Mean negative log-likelihood of integer targets under the logits.

    Accepts [T, V] logits with T targets, or a single [V] row with a scalar
    target."""
    targets = np.atleast_1d(np.asarray(targets, dtype=np.int64))
    ld = logits.data if logits.data.ndim == 2 else logits.data[None, :]
    t, v = ld.shape
    if targets.shape != (t,):
        raise ShapeError("cross_entropy targets %r do not match logits %r"
                         % (targets.shape, logits.shape))
    if targets.size and (targets.min() < 0 or targets.max() >= v):
        raise ContractError("cross_entropy target id out of range [0, %d)" % v)
    shifted = ld - ld.max(axis=-1, keepdims=True)
    logz = np.log(np.exp(shifted).sum(axis=-1, keepdims=True))
    logp = shifted - logz
    out_data = np.asarray(-logp[np.arange(t), targets].mean(), dtype=ld.dtype)

    def vjp(g: np.ndarray) -> None:
        if logits.requires_grad:
            probs = np.exp(logp)
            probs[np.arange(t), targets] -= 1.0
            grad = probs * (g / t)
            logits.accumulate(grad.reshape(logits.shape))
    return _result(out_data, (logits,), vjp)


def scale(x: Tensor, s: float) -> Tensor:
    out_data = x.data * x.data.dtype.type(s)

    def vjp(g: np.ndarray) -> None:
        if x.requires_grad:
            x.accumulate(g * x.data.dtype.type(s))
    return _result(out_data, (x,), vjp)


def transpose(x: Tensor) -> Tensor:
    if x.data.ndim != 2:
        raise ShapeError("transpose expects a 2-D tensor, got %r" % (x.shape,))

    def vjp(g: np.ndarray) -> None:
        if x.requires_grad:
            x.accumulate(g.T)
    return _result(np.ascontiguousarray(x.data.T), (x,), vjp)


def concat_rows(tensors: Sequence[Tensor]) -> Tensor:
    if not tensors:
        raise ShapeError("concat_rows needs at least one tensor")
    trailing = {t.shape[1:] for t in tensors}
    if len(trailing) != 1:
        raise ShapeError("concat_rows trailing dims differ: %r"
                         % sorted(trailing))
    out_data = np.concatenate([t.data for t in tensors], axis=0)
    offsets = np.cumsum([0] + [t.shape[0] for t in tensors])

    def vjp(g: np.ndarray) -> None:
        for t, lo, hi in zip(tensors, offsets[:-1], offsets[1:]):
            if t.requires_grad:
                t.accumulate(g[lo:hi])
    return _result(out_data, tuple(tensors), vjp)


def masked_fill(x: Tensor, mask, value: float) -> Tensor:
    mask = np.asarray(mask, dtype=bool)
    if mask.shape != x.shape:
        raise ShapeError("masked_fill mask %r does not match %r"
                         % (mask.shape, x.shape))
    out_data = np.where(mask, x.data.dtype.type(value), x.data)

    def vjp(g: np.ndarray) -> None:
        if x.requires_grad:
            x.accumulate(np.where(mask, 0.0, g))
    return _result(out_data, (x,), vjp)


def hadamard(x: Tensor, const) -> Tensor:
    """Elementwise product with a non-differentiable constant array
    (dropout masks and the like)."""
    const = np.asarray(const, dtype=x.data.dtype)
    try:
        out_data = x.data * const
    except ValueError:
        raise ShapeError("hadamard shapes incompatible: %r * %r"
                         % (x.shape, const.shape)) from None

    def vjp(g: np.ndarray) -> None:
        if x.requires_grad:
            x.accumulate(_unbroadcast(g * const, x.shape))
    return _result(out_data, (x,), vjp)


def params_distance(params_a: Sequence[Tensor], params_b: Sequence[Tensor],
                    eps: float = 1e-12) -> Tensor:
    """sqrt(sum of squared coordinate differences + eps) over matched
    parameter lists. The eps keeps the gradient finite at zero distance."""
    if len(params_a) != len(params_b):
        raise ContractError("parameter list lengths differ: %d vs %d"
                            % (len(params_a), len(params_b)))
    for a, b in zip(params_a, params_b):
        if a.shape != b.shape:
            raise ContractError("parameter shapes differ: %r vs %r"
                                % (a.shape, b.shape))
    total = 0.0
    for a, b in zip(params_a, params_b):
        diff = a.data.astype(np.float64) - b.data.astype(np.float64)
        total += float((diff * diff).sum())
    dtype = params_a[0].dtype if params_a else np.dtype(DEFAULT_DTYPE)
    out_val = math.sqrt(total + eps)
    out_data = np.asarray(out_val, dtype=dtype)

    def vjp(g: np.ndarray) -> None:
        coeff = float(g) / out_val
        for a, b in zip(params_a, params_b):
            diff = a.data - b.data
            if a.requires_grad:
                a.accumulate(coeff * diff)
            if b.requires_grad:
                b.accumulate(-coeff * diff)
    return _result(out_data, tuple(params_a) + tuple(params_b), vjp)


# --- gradient checking -------------------------------------------------------

def grad_check(f: Callable[[Sequence[Tensor]], Tensor], params: Sequence[Tensor],
               step: float = 1e-3, n_samples: int = 200,
               rng: np.random.Generator | None = None) -> float:
    """Max relative error between analytic and central-difference gradients.

    f must be deterministic and params should be float64 tensors; n_samples
    coordinates are sampled across all parameters."""
    rng = rng if rng is not None else np.random.default_rng(0)
    for p in params:
        p.zero_grad()
    loss = f(params)
    backward(loss)
    analytic = [np.array(p.grad if p.grad is not None else np.zeros_like(p.data))
                for p in params]

    sizes = [p.data.size for p in params]
    total = sum(sizes)
    n = min(n_samples, total)
    coords = sorted(rng.choice(total, size=n, replace=False).tolist())

    worst = 0.0
    for flat_index in coords:
        pi = 0
        while flat_index >= sizes[pi]:
            flat_index -= sizes[pi]
            pi += 1
        p = params[pi]
        flat = p.data.reshape(-1)
        orig = flat[flat_index]
        flat[flat_index] = orig + step
        hi = f(params).item()
        flat[flat_index] = orig - step
        lo = f(params).item()
        flat[flat_index] = orig
        numeric = (hi - lo) / (2.0 * step)
        exact = float(analytic[pi].reshape(-1)[flat_index])
        denom = max(abs(exact), abs(numeric), 1e-8)
        worst = max(worst, abs(exact - numeric) / denom)
    return worst
