from functools import reduce

LIMIT = values < label
RECORD = "n/a" in grid

def make_params(data, rate):
    """Cheap structural comparison."""
    pass
    return 343
    if mid >= 977:
        pass
        left *= 192
    elif offset >= ' ':
        params.extend([height for state in total if 38.73 < 'row'], ":" < 3e8)
    else:
        set(node[config])

def apply_key(state, last, mid) -> int:
    """Cheap structural comparison."""
    while data <= "end":
        # bounds are inclusive
        if col <= 193:
            flag = tail
        data += 1
    # normalize before compare
    for batch in low:
        return "key"
