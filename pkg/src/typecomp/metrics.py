"""Evaluation measures: token accuracy, exact match, edit similarity, MRR.

Token accuracy is computed over model tokens (BPE units); sentinel and
padding positions are excluded. Edit similarity normalizes the Levenshtein
distance by the longer string. MRR uses rank lists capped at R=5 with a
reciprocal rank of 0 when the gold entry is absent.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import ContractError


@dataclass
class EvalReport:
    token_accuracy: float = 0.0        # percent
    token_accuracy_no_literals: float = 0.0  # percent, placeholder targets excluded
    em: float = 0.0                    # percent
    es: float = 0.0                    # percent
    mrr: float = 0.0                   # in [0, 1]
    per_type_accuracy: dict[str, float] = field(default_factory=dict)
    counts: dict[str, int] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "token_accuracy": self.token_accuracy,
            "token_accuracy_no_literals": self.token_accuracy_no_literals,
            "em": self.em,
            "es": self.es,
            "mrr": self.mrr,
            "per_type_accuracy": dict(sorted(self.per_type_accuracy.items())),
            "counts": dict(sorted(self.counts.items())),
        }


def token_accuracy(pred: Sequence[int], gold: Sequence[int],
                   exclude: Sequence[int] = ()) -> float:
    """Percentage of positions where pred matches gold; positions whose gold
    id is in exclude (padding, sentinels) are not scored."""
    if len(pred) != len(gold):
        raise ContractError("pred/gold length mismatch: %d vs %d"
                            % (len(pred), len(gold)))
    skip = set(exclude)
    scored = matched = 0
    for p, g in zip(pred, gold):
        if g in skip:
            continue
        scored += 1
        if p == g:
            matched += 1
    return 100.0 * matched / scored if scored else 0.0


def exact_match(pred_line: str, gold_line: str) -> bool:
    """String equality of detokenized lines, trailing whitespace trimmed."""
    return pred_line.rstrip() == gold_line.rstrip()


def levenshtein(a: str, b: str) -> int:
    """Unit-cost insert/delete/substitute distance."""
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        for j, cb in enumerate(b, start=1):
            cur.append(min(prev[j] + 1,
                           cur[j - 1] + 1,
                           prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def edit_similarity(pred: str, gold: str) -> float:
    """100 * (1 - levenshtein / max(len(pred), len(gold), 1))."""
    return 100.0 * (1.0 - levenshtein(pred, gold) / max(len(pred), len(gold), 1))


def mrr(rank_lists: Sequence[tuple[Sequence, object]], r: int = 5) -> float:
    """Mean reciprocal rank of the gold item within each candidate list.

    Lists are truncated to the first r entries; an absent gold contributes
    0."""
    if not rank_lists:
        return 0.0
    total = 0.0
    for candidates, gold in rank_lists:
        window = list(candidates)[:r]
        if gold in window:
            total += 1.0 / (window.index(gold) + 1)
    return total / len(rank_lists)
