import math

import numpy as np
import pytest

from typecomp import autodiff as ad
from typecomp.autodiff import Tensor, backward, grad_check
from typecomp.errors import ContractError, ShapeError

RNG = np.random.default_rng(7)
TOL = 1e-4


def t64(shape, requires_grad=True, scale=1.0):
    return Tensor(RNG.normal(0, scale, size=shape), requires_grad=requires_grad,
                  dtype=np.float64)


def mean_loss(x: Tensor) -> Tensor:
    return ad.scale(ad.cross_entropy(x, np.zeros(x.shape[0] if x.data.ndim == 2
                                                 else 1, dtype=int)), 1.0)


def scalar_sum(x: Tensor) -> Tensor:
    """Reduce any tensor to a scalar through ops under test."""
    flat = x if x.data.ndim == 2 else ad.transpose(
        ad.concat_rows([x]))  # pragma: no cover
    ones_r = Tensor(np.ones((flat.shape[1], 1)), dtype=np.float64)
    ones_l = Tensor(np.ones((1, flat.shape[0])), dtype=np.float64)
    return ad.matmul(ones_l, ad.matmul(flat, ones_r))


# -- forward semantics ---------------------------------------------------------

def test_softmax_symmetry():
    out = ad.softmax(Tensor([0.0, 0.0], dtype=np.float64))
    assert np.allclose(out.data, [0.5, 0.5])


def test_cross_entropy_uniform_binary():
    logits = Tensor([0.0, 0.0], requires_grad=True, dtype=np.float64)
    loss = ad.cross_entropy(logits, 0)
    assert math.isclose(loss.item(), math.log(2), rel_tol=1e-12)
    backward(loss)
    assert np.allclose(logits.grad, [-0.5, 0.5])


def test_layer_norm_constant_vector_is_zero():
    x = Tensor(np.full((1, 8), 3.25), dtype=np.float64)
    scale = Tensor(np.ones(8), dtype=np.float64)
    shift = Tensor(np.zeros(8), dtype=np.float64)
    out = ad.layer_norm(x, scale, shift)
    assert np.allclose(out.data, 0.0)


def test_masked_fill_values():
    x = Tensor(np.arange(4.0).reshape(2, 2), dtype=np.float64)
    mask = np.array([[False, True], [False, False]])
    out = ad.masked_fill(x, mask, -1e9)
    assert out.data[0, 1] == -1e9
    assert out.data[1, 0] == 2.0


def test_shape_errors_carry_both_shapes():
    a = Tensor(np.zeros((2, 3)))
    b = Tensor(np.zeros((2, 3)))
    with pytest.raises(ShapeError) as err:
        ad.matmul(a, b)
    assert "(2, 3)" in str(err.value)


def test_backward_requires_scalar():
    x = Tensor(np.zeros((2, 2)), requires_grad=True)
    with pytest.raises(ContractError):
        backward(ad.scale(x, 1.0))


def test_sum_loss_gives_ones_gradient():
    w = t64((3, 4))
    loss = scalar_sum(w)
    backward(loss)
    assert np.allclose(w.grad, 1.0)


def test_fanout_gradient_accumulates():
    x = t64((2, 2))
    loss = scalar_sum(ad.add(x, x))
    backward(loss)
    assert np.allclose(x.grad, 2.0)


# -- gradient checks per op ----------------------------------------------------

def check(f, params, n=120):
    err = grad_check(f, params, step=1e-3, n_samples=n,
                     rng=np.random.default_rng(11))
    assert err < TOL, "max rel err %.3e" % err


def test_grad_matmul():
    a, b = t64((3, 4)), t64((4, 5))
    check(lambda ps: mean_loss(ad.matmul(ps[0], ps[1])), [a, b])


def test_grad_add_broadcast():
    a, b = t64((3, 4)), t64((4,))
    check(lambda ps: mean_loss(ad.add(ps[0], ps[1])), [a, b])


def test_grad_gelu():
    x = t64((3, 5))
    check(lambda ps: mean_loss(ad.gelu(ps[0])), [x])


def test_grad_softmax():
    x = t64((4, 6))
    w = t64((6, 3))
    check(lambda ps: mean_loss(ad.matmul(ad.softmax(ps[0]), ps[1])), [x, w])


def test_grad_layer_norm():
    x, s, b = t64((4, 8)), t64((8,), scale=0.5), t64((8,), scale=0.5)
    check(lambda ps: mean_loss(ad.layer_norm(ps[0], ps[1], ps[2])), [x, s, b])


def test_grad_embedding_lookup():
    table = t64((7, 5))
    ids = np.array([0, 3, 3, 6])
    check(lambda ps: mean_loss(ad.embedding_lookup(ps[0], ids)), [table])


def test_grad_cross_entropy():
    logits = t64((5, 9))
    targets = np.array([1, 0, 8, 3, 3])
    check(lambda ps: ad.cross_entropy(ps[0], targets), [logits])


def test_grad_scale():
    x = t64((3, 3))
    check(lambda ps: mean_loss(ad.scale(ps[0], -2.5)), [x])


def test_grad_transpose():
    x = t64((3, 5))
    check(lambda ps: mean_loss(ad.transpose(ps[0])), [x])


def test_grad_concat_rows():
    a, b = t64((2, 4)), t64((3, 4))
    check(lambda ps: mean_loss(ad.concat_rows([ps[0], ps[1]])), [a, b])


def test_grad_masked_fill():
    x = t64((4, 4))
    mask = np.triu(np.ones((4, 4), dtype=bool), k=1)
    check(lambda ps: mean_loss(ad.softmax(ad.masked_fill(ps[0], mask, -1e9))),
          [x])


def test_grad_hadamard():
    x = t64((3, 4))
    const = RNG.normal(0, 1, size=(3, 4))
    check(lambda ps: mean_loss(ad.hadamard(ps[0], const)), [x])


def test_grad_params_distance():
    a1, a2 = t64((3, 3)), t64((4,))
    b1, b2 = t64((3, 3)), t64((4,))
    check(lambda ps: ad.params_distance([ps[0], ps[1]], [ps[2], ps[3]]),
          [a1, a2, b1, b2])


def test_grad_two_consumers_sum_of_paths():
    x = t64((3, 3))
    w = t64((3, 3))

    def f(ps):
        y = ad.matmul(ps[0], ps[1])
        z = ad.add(y, ps[0])
        return mean_loss(z)
    check(f, [x, w])


def test_grad_check_linear_is_exact():
    w = t64((4, 4))
    err = grad_check(lambda ps: scalar_sum(ps[0]), [w], step=1e-3,
                     n_samples=16, rng=np.random.default_rng(5))
    assert err < 1e-9


def test_determinism_same_build():
    x = np.linspace(-2, 2, 12).reshape(3, 4)
    a = ad.gelu(Tensor(x)).data
    b = ad.gelu(Tensor(x)).data
    assert np.array_equal(a, b)
