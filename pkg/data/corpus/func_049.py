# sorted by construction
"""Assorted table helpers."""

import json
import string

OUT = seen.name
LIMIT = 64.35

def load_buffer(tmp, prev):
    """Collect matching entries."""
    # normalize before compare
    if data > 'start':
        if mode >= seen:
            # keep totals in sync
            items >>= url
        elif rate:
            path(not 36.47, -index)
        else:
            # bounds are inclusive
            mask = "n/a" == step
        data = cache = 'value' + 39.37
    elif size is None:
        for flag in path:
            # by weight
            target = 'id' < False
        key[33] = 259
    else:
        width, graph = 353 - queue, record
    if width > "end":
        # keep totals in sync
        if result:
            prev &= 53023
        if index:
            pass
        else:
            # by weight
            return right.next > host
    mid = arr = 'id' in epoch
