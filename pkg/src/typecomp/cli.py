"""Command-line entry point: preprocess, train, complete, eval, probe, sweep.

Every command is deterministic given its seed, writes its fully resolved
configuration next to its outputs, and stamps artifacts with provenance
(tool version, config hash, seed). Exit codes: 0 success, 1 contract error,
2 I/O error.
"""
from __future__ import annotations

import argparse
import glob as globlib
import hashlib
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__, align, bpe, corpus, decode, metrics, probe, trainer
from .errors import ConfigError, TypecompError
from .lexer import lex, normalize
from .model import Model, ModelConfig, load_checkpoint, save_checkpoint
from .trainer import CorpusStream, TaskWeights, TrainConfig

DEFAULTS = {
    "seed": 0,
    "vocab_size": 4096,
    "block_size": 256,
    "n_layer": 4,
    "n_head": 4,
    "n_embd": 128,
    "dropout": 0.1,
    "learning_rate": 8e-5,
    "weight_decay": 0.01,
    "batch_size": 2,
    "grad_accum_steps": 4,
    "max_steps": 200,
    "weights": "1:9",
    "method": "greedy",
    "b": 5,
    "temp": 1.0,
    "k": 5,
    "p": 0.9,
    "max_new": 100,
    "eval_lines": 50,
    "sweep_steps": 50,
    "sweep_eval_lines": 10,
}

WEIGHT_GRID = ("no-weight", "1:9", "2:8", "3:7", "4:6", "5:5",
               "6:4", "7:3", "8:2", "9:1")
BEAM_GRID = (3, 5, 10, 16, 50)
TEMP_GRID = (0.05, 0.1, 0.3, 0.5, 0.7, 0.9)
TOPK_GRID = (3, 5, 10, 50, 100)
TOPP_GRID = (0.05, 0.1, 0.3, 0.5, 0.7, 0.9)
SAMPLING_SEEDS = (1, 2, 3, 4, 5)


def load_kv_config(path: Path) -> dict[str, str]:
    """Flat key=value file; blank lines and # comments ignored."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError("%s:%d: expected key=value" % (path, lineno))
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def resolve_config(file_cfg: dict[str, str] | None,
                   overrides: dict[str, str] | None) -> dict:
    """DEFAULTS <- config file <- command-line overrides, with values coerced
    to the default's type."""
    resolved = dict(DEFAULTS)
    for source in (file_cfg or {}), (overrides or {}):
        for key, value in source.items():
            if key not in DEFAULTS:
                raise ConfigError("unknown config key %r" % key)
            default = DEFAULTS[key]
            if isinstance(default, bool):
                resolved[key] = value.lower() in ("1", "true", "yes")
            elif isinstance(default, int):
                resolved[key] = int(value)
            elif isinstance(default, float):
                resolved[key] = float(value)
            else:
                resolved[key] = str(value)
    return resolved


def config_hash(cfg: dict) -> str:
    return hashlib.sha256(
        json.dumps(cfg, sort_keys=True).encode("utf-8")).hexdigest()


def provenance(cfg: dict) -> dict:
    return {"tool_version": __version__, "config_hash": config_hash(cfg),
            "seed": cfg.get("seed", 0)}


def write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n",
                    encoding="utf-8")


def write_resolved_config(out_dir: Path, cfg: dict, command: str) -> None:
    write_json(out_dir / "run_config.json",
               {"command": command, "config": cfg, "provenance": provenance(cfg)})


def _train_config(cfg: dict) -> TrainConfig:
    return TrainConfig(learning_rate=cfg["learning_rate"],
                       weight_decay=cfg["weight_decay"],
                       batch_size=cfg["batch_size"],
                       grad_accum_steps=cfg["grad_accum_steps"],
                       max_steps=cfg["max_steps"],
                       seed=cfg["seed"])


def _model_config(cfg: dict, vocab_size: int) -> ModelConfig:
    return ModelConfig(n_layer=cfg["n_layer"], n_head=cfg["n_head"],
                       n_embd=cfg["n_embd"], block_size=cfg["block_size"],
                       vocab_size=vocab_size, dropout=cfg["dropout"])


def _decode_config(cfg: dict, seed: int | None = None) -> decode.DecodeConfig:
    return decode.DecodeConfig(method=cfg["method"], b=cfg["b"],
                               temp=cfg["temp"], k=cfg["k"], p=cfg["p"],
                               seed=cfg["seed"] if seed is None else seed,
                               max_new=cfg["max_new"])


# --- preprocess ---------------------------------------------------------------

def run_preprocess(src_dir: Path, out_dir: Path, cfg: dict) -> dict:
    out_dir.mkdir(parents=True, exist_ok=True)
    tables, stats = corpus.build_corpus(src_dir, out_dir, seed=cfg["seed"])

    train_samples = corpus.load_split(out_dir, "train")
    word_counts: dict[str, int] = {}
    for sample in train_samples:
        for word in sample.code_tokens:
            word_counts[word] = word_counts.get(word, 0) + 1

    specials = corpus.default_specials(tables)
    vocab = bpe.train_bpe(word_counts, cfg["vocab_size"], specials)
    vocab.save(out_dir / "vocab.json")
    vocab_hash = vocab.content_hash()

    encoder = bpe.Encoder(vocab)
    for split in ("train", "valid", "test"):
        aligned = []
        for sample in corpus.load_split(out_dir, split):
            for piece in align.chunk(align.align(sample, vocab, encoder),
                                     cfg["block_size"]):
                aligned.append(piece)
        align.write_dataset(aligned, vocab_hash, out_dir / f"{split}.bin")

    summary = {
        "files_used": stats.used,
        "files_skipped": stats.skipped,
        "vocab_size": len(vocab),
        "vocab_hash": vocab_hash,
        "provenance": provenance(cfg),
    }
    write_json(out_dir / "preprocess.json", summary)
    write_resolved_config(out_dir, cfg, "preprocess")
    return summary


# --- train --------------------------------------------------------------------

def _load_streams(corpus_dir: Path, vocab: bpe.Vocab,
                  split: str = "train") -> tuple[CorpusStream, CorpusStream]:
    records = align.read_dataset(corpus_dir / f"{split}.bin",
                                 expected_hash=vocab.content_hash())
    code = CorpusStream("code", [c for c, _ in records])
    types = CorpusStream("type", [t for _, t in records])
    return code, types


def _check_block_size(streams: tuple[CorpusStream, ...], block_size: int) -> None:
    longest = max((len(s) for stream in streams for s in stream.sequences),
                  default=0)
    if longest - 1 > block_size:
        raise ConfigError(
            "dataset sequences reach %d ids but block_size is %d; "
            "re-preprocess with a smaller block or raise block_size"
            % (longest, block_size))


def run_train(corpus_dir: Path, strategy: str, cfg: dict, out_dir: Path) -> dict:
    if strategy not in ("hard", "soft", "ift"):
        raise ConfigError("unknown strategy %r" % strategy)
    out_dir.mkdir(parents=True, exist_ok=True)
    vocab = bpe.Vocab.load(corpus_dir / "vocab.json")
    vocab_hash = vocab.content_hash()
    d_code, d_type = _load_streams(corpus_dir, vocab)
    _check_block_size((d_code, d_type), cfg["block_size"])
    tcfg = _train_config(cfg)
    weights = TaskWeights.from_ratio(cfg["weights"])
    mcfg = _model_config(cfg, len(vocab))

    if strategy == "hard":
        model = Model.init(mcfg, seed=cfg["seed"])
        model, history = trainer.train_hard(model, d_code, d_type, weights, tcfg)
    elif strategy == "soft":
        model = Model.init(mcfg, seed=cfg["seed"])
        model_type = Model.init(mcfg, seed=cfg["seed"] + 1)
        model, model_type, history = trainer.train_soft(
            model, model_type, d_code, d_type, weights, tcfg)
        save_checkpoint(model_type, out_dir / "checkpoint_type.bin",
                        step=tcfg.max_steps, seed=cfg["seed"], vocab_hash=vocab_hash)
    else:
        model = Model.init(mcfg, seed=cfg["seed"])

        def save_phase1(m: Model, step: int) -> None:
            save_checkpoint(m, out_dir / "checkpoint_phase1.bin",
                            step=step, seed=cfg["seed"], vocab_hash=vocab_hash)
        model, history = trainer.train_ift(model, d_type, d_code, tcfg,
                                           checkpoint_cb=save_phase1)

    save_checkpoint(model, out_dir / "checkpoint.bin",
                    step=tcfg.max_steps, seed=cfg["seed"], vocab_hash=vocab_hash)
    with open(out_dir / "history.jsonl", "w", encoding="utf-8") as fh:
        fh.write(json.dumps({"provenance": provenance(cfg)},
                            sort_keys=True) + "\n")
        for row in history:
            fh.write(json.dumps(row, sort_keys=True) + "\n")
    write_resolved_config(out_dir, cfg, "train:" + strategy)
    return {"steps": len(history), "checkpoint": str(out_dir / "checkpoint.bin")}


# --- complete -----------------------------------------------------------------

def context_ids_from_source(text: str, tables: corpus.LiteralTables,
                            vocab: bpe.Vocab) -> list[int]:
    """Raw source text -> masked context ids, sentence-start included.

    A completion context is a program prefix mid-typing, so the lexer's
    end-of-input closure (EOF dedents, and the implicit end-of-line when the
    text lacks a final newline) is stripped: the model, not the lexer, should
    decide whether the line or block is over."""
    raw = lex(text)
    while raw and raw[-1].kind == "DEDENT":
        raw.pop()
    if (not text.endswith("\n") and raw
            and raw[-1].kind in ("NEWLINE", "NL") and raw[-1].text == ""):
        raw.pop()
    words = [corpus.BOS] + corpus.mask_literals(normalize(raw), tables)
    encoder = bpe.Encoder(vocab)
    ids: list[int] = []
    for word in words:
        ids.extend(encoder(word))
    return ids


def run_complete(checkpoint: Path, corpus_dir: Path, cfg: dict,
                 text: str) -> str:
    model, header = load_checkpoint(checkpoint)
    vocab = bpe.Vocab.load(corpus_dir / "vocab.json")
    if header["vocab_hash"] != vocab.content_hash():
        raise ConfigError("checkpoint/vocab hash mismatch")
    tables = corpus.LiteralTables.load(corpus_dir / "literals.json")
    ids = context_ids_from_source(text, tables, vocab)
    dcfg = _decode_config(cfg)
    rng = np.random.default_rng(cfg["seed"])
    return decode.complete_line(model, ids, dcfg, vocab, rng)


# --- eval ---------------------------------------------------------------------

def _token_level_eval(model: Model, records: list[tuple[list[int], list[int]]],
                      vocab: bpe.Vocab) -> dict:
    sentinel_ids = {vocab.id_of[corpus.BOS], vocab.id_of[corpus.EOS]}
    literal_ids = {i for i, tok in enumerate(vocab.tokens)
                   if tok.startswith("⟨STR_LIT") or tok.startswith("⟨NUM_LIT")}
    scored = matched = 0
    scored_nl = matched_nl = 0
    rank_hits = 0.0
    per_type: dict[str, list[int]] = {}
    for code_ids, type_ids in records:
        if len(code_ids) < 2:
            continue
        logits = model.forward(code_ids[:-1]).data
        order = np.argsort(-logits, axis=-1, kind="stable")
        for t in range(len(code_ids) - 1):
            gold = code_ids[t + 1]
            if gold in sentinel_ids:
                continue
            pred = int(order[t, 0])
            hit = pred == gold
            scored += 1
            matched += hit
            if gold not in literal_ids:
                scored_nl += 1
                matched_nl += hit
            top5 = order[t, :5]
            where = np.nonzero(top5 == gold)[0]
            if where.size:
                rank_hits += 1.0 / (int(where[0]) + 1)
            tname = vocab.tokens[type_ids[t + 1]].strip("⟨⟩")
            bucket = per_type.setdefault(tname, [0, 0])
            bucket[0] += hit
            bucket[1] += 1
    return {
        "token_accuracy": 100.0 * matched / scored if scored else 0.0,
        "token_accuracy_no_literals":
            100.0 * matched_nl / scored_nl if scored_nl else 0.0,
        "mrr": rank_hits / scored if scored else 0.0,
        "per_type_accuracy": {k: 100.0 * h / n for k, (h, n) in
                              sorted(per_type.items())},
        "scored_positions": scored,
    }


def _strip_eol(words: list[str]) -> list[str]:
    return words[:-1] if words and words[-1] == corpus.EOL_MARK else words


def _line_level_eval(model: Model, cases: list[tuple[list[str], list[str]]],
                     vocab: bpe.Vocab, dcfg: decode.DecodeConfig,
                     seed: int) -> dict:
    """EM/ES over line-completion cases. Both sides are compared as decoded
    character strings (no spaces): word-internal BPE keeps no boundary marker
    in the id stream, so this comparison needs no segmentation."""
    encoder = bpe.Encoder(vocab)
    eol_id = vocab.id_of[corpus.EOL_MARK]
    em_hits = 0
    es_total = 0.0
    rng = np.random.default_rng(seed)
    for ctx_words, gold_words in cases:
        ctx: list[int] = []
        for word in ctx_words:
            ctx.extend(encoder(word))
        pred_ids = decode.generate_ids(model, ctx, dcfg, eol_id, rng)
        pred = decode.completion_text(pred_ids, vocab)
        gold = "".join(_strip_eol(gold_words))
        em_hits += metrics.exact_match(pred, gold)
        es_total += metrics.edit_similarity(pred.rstrip(), gold.rstrip())
    n = len(cases)
    return {"em": 100.0 * em_hits / n if n else 0.0,
            "es": es_total / n if n else 0.0,
            "line_cases": n}


def run_eval(checkpoint: Path, corpus_dir: Path, cfg: dict,
             out_path: Path | None = None) -> dict:
    model, header = load_checkpoint(checkpoint)
    vocab = bpe.Vocab.load(corpus_dir / "vocab.json")
    if header["vocab_hash"] != vocab.content_hash():
        raise ConfigError("checkpoint/vocab hash mismatch")
    records = align.read_dataset(corpus_dir / "test.bin",
                                 expected_hash=vocab.content_hash())
    token_part = _token_level_eval(model, records, vocab)

    samples = corpus.load_split(corpus_dir, "test")
    cases = corpus.line_eval_cases(samples, seed=cfg["seed"])[:cfg["eval_lines"]]
    dcfg = _decode_config(cfg)
    line_part = _line_level_eval(model, cases, vocab, dcfg, cfg["seed"])

    report = metrics.EvalReport(
        token_accuracy=token_part["token_accuracy"],
        token_accuracy_no_literals=token_part["token_accuracy_no_literals"],
        em=line_part["em"], es=line_part["es"], mrr=token_part["mrr"],
        per_type_accuracy=token_part["per_type_accuracy"],
        counts={"scored_positions": token_part["scored_positions"],
                "line_cases": line_part["line_cases"],
                "test_records": len(records)},
    )
    payload = report.as_dict()
    payload["config"] = dict(cfg)
    payload["provenance"] = provenance(cfg)
    payload["provenance"]["checkpoint_hash"] = hashlib.sha256(
        Path(checkpoint).read_bytes()).hexdigest()
    payload["provenance"]["decode"] = {
        "method": dcfg.method, "b": dcfg.b, "temp": dcfg.temp,
        "k": dcfg.k, "p": dcfg.p, "max_new": dcfg.max_new}
    if out_path is not None:
        write_json(out_path, payload)
    return payload


# --- probe --------------------------------------------------------------------

def run_probe(pattern: str, checker: str, cfg: dict,
              out_path: Path | None = None) -> dict:
    paths = sorted(globlib.glob(pattern, recursive=True))
    if not paths:
        raise ConfigError("probe glob %r matched no files" % pattern)
    reports = [probe.scan_path(Path(p), checker) for p in paths]
    agg = probe.aggregate(reports)
    payload = {"checker": checker, "aggregate": agg,
               "files": [r.as_dict() for r in reports],
               "config": dict(cfg), "provenance": provenance(cfg)}
    if out_path is not None:
        write_json(out_path, payload)
    return payload


# --- sweep --------------------------------------------------------------------

def _quick_token_accuracy(model: Model, corpus_dir: Path,
                          vocab: bpe.Vocab) -> float:
    records = align.read_dataset(corpus_dir / "test.bin",
                                 expected_hash=vocab.content_hash())
    return _token_level_eval(model, records, vocab)["token_accuracy"]


def run_sweep(axis: str, corpus_dir: Path, cfg: dict, out_dir: Path) -> dict:
    out_dir.mkdir(parents=True, exist_ok=True)
    vocab = bpe.Vocab.load(corpus_dir / "vocab.json")
    if axis == "weights":
        payload = _sweep_weights(corpus_dir, cfg, vocab)
        out_path = out_dir / "sweep_weights.json"
    elif axis == "decode":
        payload = _sweep_decode(corpus_dir, cfg, vocab, out_dir)
        out_path = out_dir / "sweep_decode.json"
    else:
        raise ConfigError("unknown sweep axis %r" % axis)
    payload["provenance"] = provenance(cfg)
    write_json(out_path, payload)
    write_resolved_config(out_dir, cfg, "sweep:" + axis)
    return payload


def _sweep_weights(corpus_dir: Path, cfg: dict, vocab: bpe.Vocab) -> dict:
    d_code, d_type = _load_streams(corpus_dir, vocab)
    _check_block_size((d_code, d_type), cfg["block_size"])
    tcfg = TrainConfig(learning_rate=cfg["learning_rate"],
                       weight_decay=cfg["weight_decay"],
                       batch_size=cfg["batch_size"],
                       grad_accum_steps=cfg["grad_accum_steps"],
                       max_steps=cfg["sweep_steps"], seed=cfg["seed"])
    mcfg = _model_config(cfg, len(vocab))

    def trained_accuracy(weights: TaskWeights) -> float:
        model = Model.init(mcfg, seed=cfg["seed"])
        trainer.train_hard(model, d_code, d_type, weights, tcfg)
        return _quick_token_accuracy(model, corpus_dir, vocab)

    rows = []
    for spec in WEIGHT_GRID:
        weights = TaskWeights.from_ratio(spec)
        rows.append({"weights": spec,
                     "alpha_type": weights.alpha_type,
                     "alpha_code": weights.alpha_code,
                     "token_accuracy": trained_accuracy(weights)})
    baseline = {"weights": "code-only",
                "token_accuracy": trained_accuracy(TaskWeights(0.0, 1.0))}
    return {"axis": "weights", "rows": rows, "baseline": baseline}


def _sweep_decode(corpus_dir: Path, cfg: dict, vocab: bpe.Vocab,
                  out_dir: Path) -> dict:
    checkpoint = out_dir / "checkpoint.bin"
    if not checkpoint.exists():
        raise ConfigError("decode sweep needs %s" % checkpoint)
    model, header = load_checkpoint(checkpoint)
    if header["vocab_hash"] != vocab.content_hash():
        raise ConfigError("checkpoint/vocab hash mismatch")
    samples = corpus.load_split(corpus_dir, "test")
    cases = corpus.line_eval_cases(samples, seed=cfg["seed"])
    cases = cases[:cfg["sweep_eval_lines"]]

    def line_metrics(dcfg: decode.DecodeConfig, seed: int) -> dict:
        return _line_level_eval(model, cases, vocab, dcfg, seed)

    def deterministic_row(label: str, dcfg: decode.DecodeConfig) -> dict:
        result = line_metrics(dcfg, cfg["seed"])
        return {"method": label, "em": result["em"], "es": result["es"]}

    def sampled_row(label: str, make_cfg) -> dict:
        ems, ess = [], []
        for seed in SAMPLING_SEEDS:
            result = line_metrics(make_cfg(seed), seed)
            ems.append(result["em"])
            ess.append(result["es"])
        return {"method": label,
                "em_mean": float(np.mean(ems)), "em_sd": float(np.std(ems)),
                "es_mean": float(np.mean(ess)), "es_sd": float(np.std(ess))}

    base = {k: cfg[k] for k in ("method", "b", "temp", "k", "p", "max_new")}
    rows = [deterministic_row("greedy", decode.DecodeConfig(
        method="greedy", max_new=cfg["max_new"]))]
    for b in BEAM_GRID:
        rows.append(deterministic_row("beam(b=%d)" % b, decode.DecodeConfig(
            method="beam", b=b, max_new=cfg["max_new"])))
    rows.append(sampled_row("sample", lambda s: decode.DecodeConfig(
        method="sample", seed=s, max_new=cfg["max_new"])))
    for temp in TEMP_GRID:
        rows.append(sampled_row(
            "temperature(temp=%s)" % temp,
            lambda s, t=temp: decode.DecodeConfig(method="temperature", temp=t,
                                                  seed=s, max_new=cfg["max_new"])))
    for k in TOPK_GRID:
        rows.append(sampled_row(
            "top_k(k=%d)" % k,
            lambda s, kk=k: decode.DecodeConfig(method="top_k", k=kk, seed=s,
                                                max_new=cfg["max_new"])))
    for p in TOPP_GRID:
        rows.append(sampled_row(
            "top_p(p=%s)" % p,
            lambda s, pp=p: decode.DecodeConfig(method="top_p", p=pp, seed=s,
                                                max_new=cfg["max_new"])))
    return {"axis": "decode", "base_config": base, "rows": rows,
            "line_cases": len(cases)}


# --- argument parsing ----------------------------------------------------------

def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, default=None,
                        help="flat key=value config file")
    parser.add_argument("--set", action="append", default=[], metavar="K=V",
                        help="override one config key")


def _collect_cfg(args: argparse.Namespace,
                 extra: dict[str, str] | None = None) -> dict:
    file_cfg = load_kv_config(args.config) if args.config else None
    overrides: dict[str, str] = {}
    for item in args.set:
        if "=" not in item:
            raise ConfigError("--set needs key=value, got %r" % item)
        key, value = item.split("=", 1)
        overrides[key] = value
    if extra:
        overrides.update(extra)
    return resolve_config(file_cfg, overrides)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="typecomp",
        description="Token-type-supervised code completion toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("preprocess", help="build corpus, vocab and datasets")
    p.add_argument("src_dir", type=Path)
    p.add_argument("out_dir", type=Path)
    _add_common(p)

    p = sub.add_parser("train", help="train a model")
    p.add_argument("corpus_dir", type=Path)
    p.add_argument("--strategy", choices=("hard", "soft", "ift"),
                   default="hard")
    p.add_argument("--out", type=Path, required=True)
    _add_common(p)

    p = sub.add_parser("complete", help="complete a line of code")
    p.add_argument("--checkpoint", type=Path, required=True)
    p.add_argument("--corpus", type=Path, required=True)
    p.add_argument("--context", type=Path, default=None,
                   help="context file (default: stdin)")
    p.add_argument("--method", choices=decode.METHODS, default=None)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--temp", type=float, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-new", type=int, default=None, dest="max_new")
    _add_common(p)

    p = sub.add_parser("eval", help="evaluate a checkpoint")
    p.add_argument("--checkpoint", type=Path, required=True)
    p.add_argument("--corpus", type=Path, required=True)
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--method", choices=decode.METHODS, default=None)
    _add_common(p)

    p = sub.add_parser("probe", help="character-prefix validity scan")
    p.add_argument("--glob", required=True)
    p.add_argument("--checker", choices=probe.CHECKERS, default="token")
    p.add_argument("--out", type=Path, default=None)
    _add_common(p)

    p = sub.add_parser("sweep", help="task weight or decoding sweeps")
    p.add_argument("corpus_dir", type=Path)
    p.add_argument("--axis", choices=("weights", "decode"), required=True)
    p.add_argument("--out", type=Path, required=True)
    _add_common(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "preprocess":
            cfg = _collect_cfg(args)
            summary = run_preprocess(args.src_dir, args.out_dir, cfg)
            print("preprocess: %d files, vocab %d"
                  % (summary["files_used"], summary["vocab_size"]))
        elif args.command == "train":
            cfg = _collect_cfg(args)
            result = run_train(args.corpus_dir, args.strategy, cfg, args.out)
            print("trained %d steps -> %s" % (result["steps"], result["checkpoint"]))
        elif args.command == "complete":
            extra = {}
            for key in ("method", "b", "temp", "k", "p", "seed", "max_new"):
                value = getattr(args, key)
                if value is not None:
                    extra[key] = str(value)
            cfg = _collect_cfg(args, extra)
            text = (args.context.read_text(encoding="utf-8")
                    if args.context else sys.stdin.read())
            print(run_complete(args.checkpoint, args.corpus, cfg, text))
        elif args.command == "eval":
            extra = {"method": args.method} if args.method else {}
            cfg = _collect_cfg(args, extra)
            payload = run_eval(args.checkpoint, args.corpus, cfg, args.out)
            print("token accuracy %.2f%%  EM %.2f%%  ES %.2f  MRR %.4f"
                  % (payload["token_accuracy"], payload["em"],
                     payload["es"], payload["mrr"]))
        elif args.command == "probe":
            cfg = _collect_cfg(args)
            payload = run_probe(args.glob, args.checker, cfg, args.out)
            print(probe.summary_table(payload["aggregate"]))
        elif args.command == "sweep":
            cfg = _collect_cfg(args)
            payload = run_sweep(args.axis, args.corpus_dir, cfg, args.out)
            print("sweep %s: %d rows" % (args.axis, len(payload["rows"])))
        return 0
    except TypecompError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except OSError as exc:
        print("i/o error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
