import numpy as np
import pytest

from typecomp.autodiff import Tensor, grad_check
from typecomp.errors import ConfigError, ContractError
from typecomp.model import Model, ModelConfig
from typecomp.trainer import (AdamState, CorpusStream, TaskWeights,
                              TrainConfig, adam_step, parameter_distance,
                              sharing_loss, train_hard, train_ift,
                              train_single, train_soft)

CFG = ModelConfig(n_layer=1, n_head=2, n_embd=16, block_size=32,
                  vocab_size=20, dropout=0.0)


def make_streams(seed=0, n=12, length=10):
    rng = np.random.default_rng(seed)
    code = [[int(x) for x in rng.integers(0, CFG.vocab_size, size=length)]
            for _ in range(n)]
    types = [[int(x) for x in rng.integers(0, 6, size=length)]
             for _ in range(n)]
    return CorpusStream("code", code), CorpusStream("type", types)


def tcfg(**kw):
    base = dict(learning_rate=1e-3, weight_decay=0.0, batch_size=2,
                grad_accum_steps=1, max_steps=5, seed=1)
    base.update(kw)
    return TrainConfig(**base)


# -- TaskWeights ----------------------------------------------------------------

def test_weight_ratio_parsing():
    w = TaskWeights.from_ratio("1:9")
    assert w.alpha_type == pytest.approx(0.1)
    assert w.alpha_code == pytest.approx(0.9)
    nw = TaskWeights.from_ratio("no-weight")
    assert (nw.alpha_type, nw.alpha_code) == (1.0, 1.0)
    assert TaskWeights.from_ratio("5:5").alpha_type == pytest.approx(0.5)


def test_weights_validation():
    with pytest.raises(ConfigError):
        TaskWeights(0.0, 0.0)
    with pytest.raises(ConfigError):
        TaskWeights(-1.0, 2.0)
    with pytest.raises(ConfigError):
        TaskWeights.from_ratio("junk")


def test_train_config_validation():
    with pytest.raises(ConfigError):
        TrainConfig(learning_rate=0.0)
    with pytest.raises(ConfigError):
        TrainConfig(batch_size=0)


# -- adam ------------------------------------------------------------------------

def test_adam_zero_gradient_no_decay_keeps_params():
    p = Tensor(np.ones((3, 3)), requires_grad=True)
    before = p.data.copy()
    state = AdamState.init_like([p])
    adam_step([p], [np.zeros((3, 3), dtype=np.float32)], state,
              tcfg(weight_decay=0.0))
    assert np.array_equal(p.data, before)


def test_adam_constant_gradient_step_approaches_lr():
    p = Tensor(np.zeros(4), requires_grad=True, dtype=np.float64)
    g = np.full(4, 0.37)
    state = AdamState.init_like([p])
    cfg = tcfg(learning_rate=1e-3)
    prev = p.data.copy()
    for _ in range(300):
        prev = p.data.copy()
        adam_step([p], [g], state, cfg)
    step_size = np.abs(p.data - prev)
    assert np.allclose(step_size, cfg.learning_rate, rtol=1e-3)


def test_adam_weight_decay_only_geometric_shrink():
    p = Tensor(np.full(3, 2.0), requires_grad=True, dtype=np.float64)
    cfg = tcfg(learning_rate=0.1, weight_decay=0.5)
    state = AdamState.init_like([p])
    adam_step([p], [np.zeros(3)], state, cfg)
    assert np.allclose(p.data, 2.0 * (1 - 0.1 * 0.5))
    adam_step([p], [np.zeros(3)], state, cfg)
    assert np.allclose(p.data, 2.0 * (1 - 0.1 * 0.5) ** 2)


# -- sharing loss ----------------------------------------------------------------

def test_sharing_loss_identical_params_near_zero():
    a = [Tensor(np.ones((4, 4)), requires_grad=True)]
    b = [Tensor(np.ones((4, 4)), requires_grad=True)]
    assert sharing_loss(a, b).item() <= 1e-6


def test_sharing_loss_hand_value():
    a = [Tensor(np.array([1.0, 2.0]), requires_grad=True, dtype=np.float64)]
    b = [Tensor(np.array([1.0, 0.0]), requires_grad=True, dtype=np.float64)]
    assert sharing_loss(a, b).item() == pytest.approx(2.0, abs=1e-9)


def test_sharing_loss_shape_mismatch():
    a = [Tensor(np.zeros((2, 2)))]
    b = [Tensor(np.zeros((3,)))]
    with pytest.raises(ContractError):
        sharing_loss(a, b)


def test_sharing_loss_gradient():
    rng = np.random.default_rng(3)
    a = [Tensor(rng.normal(size=(3, 3)), requires_grad=True, dtype=np.float64),
         Tensor(rng.normal(size=(5,)), requires_grad=True, dtype=np.float64)]
    b = [Tensor(rng.normal(size=(3, 3)), requires_grad=True, dtype=np.float64),
         Tensor(rng.normal(size=(5,)), requires_grad=True, dtype=np.float64)]
    err = grad_check(lambda ps: sharing_loss(ps[:2], ps[2:]), a + b,
                     step=1e-3, n_samples=23, rng=np.random.default_rng(2))
    assert err < 1e-4


# -- training loops ---------------------------------------------------------------

def test_hard_sharing_zero_type_weight_is_bitwise_single_task():
    d_code, d_type = make_streams()
    cfg = tcfg(max_steps=4)
    m1 = Model.init(CFG, seed=7)
    m2 = Model.init(CFG, seed=7)
    _, hist_hard = train_hard(m1, d_code, d_type, TaskWeights(0.0, 1.0), cfg)
    _, hist_single = train_single(m2, d_code, cfg)
    for name in m1.params:
        assert np.array_equal(m1.params[name].data, m2.params[name].data), name
    assert [row["l_code"] for row in hist_hard] == \
        [row["l_code"] for row in hist_single]


def test_hard_sharing_records_both_losses():
    d_code, d_type = make_streams()
    model = Model.init(CFG, seed=1)
    _, history = train_hard(model, d_code, d_type,
                            TaskWeights.from_ratio("1:9"), tcfg(max_steps=3))
    assert len(history) == 3
    assert all("l_code" in row and "l_type" in row for row in history)
    assert all(np.isfinite(row["l_code"]) and np.isfinite(row["l_type"])
               for row in history)


def test_training_determinism_bitwise():
    d_code, d_type = make_streams()
    results = []
    for _ in range(2):
        model = Model.init(CFG, seed=9)
        _, history = train_hard(model, d_code, d_type,
                                TaskWeights.from_ratio("5:5"), tcfg(max_steps=3))
        results.append(([row["l_code"] for row in history],
                        model.params["wte"].data.copy()))
    assert results[0][0] == results[1][0]
    assert np.array_equal(results[0][1], results[1][1])


def test_empty_stream_raises():
    d_code, _ = make_streams()
    empty = CorpusStream("type", [])
    model = Model.init(CFG, seed=0)
    with pytest.raises(ConfigError):
        train_hard(model, d_code, empty, TaskWeights(0.5, 0.5), tcfg())


def test_loss_decreases_under_training():
    # window-10 smoothed losses at step 200 sit strictly below step 0
    d_code, d_type = make_streams(n=32, length=12)
    model = Model.init(CFG, seed=3)
    _, history = train_hard(model, d_code, d_type, TaskWeights(0.1, 0.9),
                            tcfg(max_steps=200, learning_rate=3e-3))
    for key in ("l_code", "l_type"):
        first = np.mean([row[key] for row in history[:10]])
        last = np.mean([row[key] for row in history[-10:]])
        assert last < first, key


def test_soft_sharing_pulls_parameters_together():
    d_code, d_type = make_streams(n=6)
    cfg = tcfg(max_steps=40, learning_rate=2e-3)
    m_code = Model.init(CFG, seed=11)
    m_type = Model.init(CFG, seed=12)
    d0 = parameter_distance(m_code, m_type)
    m_code, m_type, history = train_soft(m_code, m_type, d_code, d_type,
                                         TaskWeights(0.5, 0.5), cfg)
    d1 = parameter_distance(m_code, m_type)
    assert d1 < d0
    assert all(np.isfinite(row["l_sharing"]) for row in history)
    assert all(np.isfinite(row["l_code"]) for row in history)


def test_soft_sharing_ablation_distance_larger_without_coupling():
    d_code, d_type = make_streams(n=6)
    cfg = tcfg(max_steps=25, learning_rate=2e-3)
    m_code = Model.init(CFG, seed=11)
    m_type = Model.init(CFG, seed=12)
    m_code, m_type, _ = train_soft(m_code, m_type, d_code, d_type,
                                   TaskWeights(0.5, 0.5), cfg)
    coupled = parameter_distance(m_code, m_type)

    a = Model.init(CFG, seed=11)
    b = Model.init(CFG, seed=12)
    train_single(a, d_code, cfg)
    train_single(b, d_type, cfg)
    uncoupled = parameter_distance(a, b)
    assert coupled < uncoupled


def test_soft_sharing_config_mismatch():
    d_code, d_type = make_streams()
    other = ModelConfig(n_layer=2, n_head=2, n_embd=16, block_size=32,
                        vocab_size=20, dropout=0.0)
    with pytest.raises(ConfigError):
        train_soft(Model.init(CFG, seed=0), Model.init(other, seed=0),
                   d_code, d_type, TaskWeights(0.5, 0.5), tcfg())


def test_ift_phases_and_checkpoint_resume(tmp_path):
    d_code, d_type = make_streams()
    cfg = tcfg(max_steps=6)
    saved = {}

    def grab(model, step):
        saved["step"] = step
        saved["params"] = {n: p.data.copy() for n, p in model.params.items()}

    m = Model.init(CFG, seed=5)
    m, history = train_ift(m, d_type, d_code, cfg, checkpoint_cb=grab)
    assert saved["step"] == 3
    assert len(history) == 6
    assert "l_type" in history[0] and "l_code" in history[-1]

    # resuming phase 2 from the checkpointed parameters reproduces the final
    # model exactly (the optimizer restarts at the phase boundary)
    resumed = Model.init(CFG, seed=5)
    for name, p in resumed.params.items():
        p.data = saved["params"][name].copy()
    cfg2 = TrainConfig(cfg.learning_rate, cfg.weight_decay, cfg.batch_size,
                       cfg.grad_accum_steps, 3, cfg.seed)
    train_single(resumed, d_code, cfg2, start_step=3)
    for name in m.params:
        assert np.array_equal(m.params[name].data, resumed.params[name].data)


def test_ift_transfer_effect_reported(capsys):
    # phase-2 starting code loss vs a fresh model: reported, not gated
    d_code, d_type = make_streams(n=8)
    cfg = tcfg(max_steps=40, learning_rate=3e-3)
    warmed = Model.init(CFG, seed=5)
    cfg1 = tcfg(max_steps=20, learning_rate=3e-3)
    train_single(warmed, d_type, cfg1)
    fresh = Model.init(CFG, seed=5)
    from typecomp.model import lm_loss
    batch = next(d_code.batches(4, seed=2))
    warmed_loss = float(np.mean([lm_loss(warmed, s).item() for s in batch]))
    fresh_loss = float(np.mean([lm_loss(fresh, s).item() for s in batch]))
    print("ift transfer: warmed code loss %.4f vs fresh %.4f"
          % (warmed_loss, fresh_loss))
    assert np.isfinite(warmed_loss) and np.isfinite(fresh_loss)


def test_argmin_invariance_of_weight_scaling():
    # scaling both alphas leaves the gradient direction unchanged
    d_code, d_type = make_streams()
    grads = []
    for scale in (1.0, 3.0):
        model = Model.init(CFG, seed=13)
        from typecomp import autodiff as ad
        from typecomp.model import lm_loss
        code_batch = next(d_code.batches(2, seed=1))
        type_batch = next(d_type.batches(2, seed=1))
        loss = ad.add(
            ad.scale(lm_loss(model, code_batch[0]), 0.9 * scale),
            ad.scale(lm_loss(model, type_batch[0]), 0.1 * scale))
        model.zero_grads()
        ad.backward(loss)
        g = np.concatenate([p.grad.ravel() for p in model.param_list()
                            if p.grad is not None])
        grads.append(g / np.linalg.norm(g))
    assert np.allclose(grads[0], grads[1], atol=1e-6)
