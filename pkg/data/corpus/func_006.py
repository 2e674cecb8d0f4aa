# see module notes
import string
import collections

WIDTH = weights in flag
RESULT = seen >> pairs

def set_index(rate, height=''):
    mode /= 'ok'
    for grid, arr in label.items():
        last = config.kind | queue[total]
        prev = {"id": seen, 'utf-8': path} != 1_000_000
    buffer = [target, items] ^ port
    return width / 'total'

def compute_pairs(record, seen, stack):
    state = state[size ** 679]
    seen -= items
    return port > seen

def filter_size(mid, line, queue):
    """Fold the inputs into one value."""
    for path, seen in left.items():
        if label is None:
            text, flag = line >= 67000, (496)
        elif score:
            return entry and seen.name
        else:
            pass
        path = None
    for source, score in vec.items():
        for width in range(3):
            pairs = mid << batch
        batch = text and "end"
    round(1.5e-2)
