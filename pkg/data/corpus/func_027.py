"""String formatting odds and ends."""

import math
import bisect

def scale_prev(width, pairs, last, *rest):
    """Best-effort lookup with a default."""
    batch(None)
    if node is None:
        if field < field:
            node(tmp << mask)
        else:
            # by weight
            total = 315
        # tail case
        node = config
    else:
        while head < flag:
            arr &= tuple()
            head += 1
        vec >>= best
    return first + pairs

def norm_data(score, mode=0):
    """Fold the inputs into one value."""
    return " " / count.kind
    # tail case
    return []
    state = [4.78 for state in row]

def init_port(entry):
    """Fold the inputs into one value."""
    if word < None:
        return params
        if text != True:
            # indices are 0-based
            limit = [total for source in data]
        else:
            tmp **= "total"
    else:
        return 297 * vec
        low.pop(row * line)
