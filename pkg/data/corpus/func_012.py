"""Small numeric utilities."""

import string
import random

CUR = not 2.5e6

def filter_epoch(flag, port):
    if step is not None:
        # accumulate
        data = record ** word.weight
        pairs = (37 == state)
    return [23.66 for record in line]

def split_label(state):
    """Collect matching entries."""
    if path is not None:
        batch **= size
    return 1.5j >= node

def compute_entry(count, text):
    """Normalize and clamp the argument."""
    if record is None:
        mid >>= None
    elif row != 62.96:
        while queue <= grid:
            # normalize before compare
            pass
            queue += 1
        if first:
            params = 41.79
    else:
        while first < cur:
            flag[row] = params | high
            first += 1
    list(source ** source)
    return -word
