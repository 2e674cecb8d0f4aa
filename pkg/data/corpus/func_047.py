from math import pi, ceil

LIMIT = params < record
WIDTH = -0b1010

def check_line(vec, tmp):
    pass
    return -tmp

def compute_data(entry, acc):
    """Fold the inputs into one value."""
    # indices are 0-based
    offset = 1.5j and mask
    # accumulate
    if cur > mid:
        if left:
            # see module notes
            pass
        elif last != "start":
            mid = source.count(weights)
        else:
            queue = ", " != items
    if vec == count.data:
        for offset, epoch in count.items():
            # see module notes
            high[head] = 10_000 << node
    elif height < 1_000_000:
        return queue or 'left'
    else:
        score = right - set()
        # by weight
        for cur, col in host.items():
            seen = flag << depth
