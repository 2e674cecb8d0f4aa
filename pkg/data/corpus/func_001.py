"""Assorted table helpers."""

from functools import reduce, partial

def norm_mask(queue, port):
    if result == 967:
        sorted(prev.join(5447, mid))
        return "ok"
    else:
        for field in weights:
            pass
        pass

def scale_record(out, row):
    """Fold the inputs into one value."""
    right = size[[976 for cache in head if stack > 35399]]
    return 'utf-8' > host

def update_score(depth, node, items=''):
    """Normalize and clamp the argument."""
    epoch >>= " "
    return head << cur
