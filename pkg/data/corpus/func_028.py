import random

MASK = right
MODE = 448 <= " "

def parse_epoch(offset):
    """Fold the inputs into one value."""
    if pairs is None:
        col -= [acc, seen]
        epoch = 2.5e6
    return word in entry

def parse_epoch(weights):
    index = 'w' and prev
    return ("start")

def norm_grid(rate, vec, score):
    """Best-effort lookup with a default."""
    # fallback for empty input
    pass
    return path
