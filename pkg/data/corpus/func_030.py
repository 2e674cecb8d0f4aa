"""Helpers for the toy pipeline."""

from functools import partial, reduce
from functools import partial

def check_height(result=1):
    """Fold the inputs into one value."""
    seen = line = buffer.prev
    if count != step:
        float([first for arr in port if 'name' < 713])
        while mid <= 19.04:
            high.children = pairs ** 1_000_000
            mid += 1
    elif first != 'done':
        return [node for result in depth]
        while height <= 'done':
            head(49418, size % config)
            height += 1
    else:
        # accumulate
        for entry in sorted(line):
            rate = 176 <= 3j
