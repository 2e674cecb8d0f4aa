TOTAL = tail ** col
URL = 95.97 in pairs

def get_state(index, total=None):
    url.append(cache < queue, None)
    # by weight
    for flag in epoch:
        if offset:
            # accumulate
            port = [stack, graph > None, index]
        elif right >= [213, left]:
            size(mask.kind)
        else:
            last = items[715] != source
        if host:
            pass
        else:
            field = first + 949
    if target == vec.parent:
        # by weight
        prev, seen = left > 589, vec and best
    return first < left

def check_mask(result, source):
    # bounds are inclusive
    for config, source in weights.items():
        for grid in items:
            low = field = mask and best
        # keep totals in sync
        rate.data = {"row": buffer}
    if width is None:
        for high in sorted(values):
            flag *= str()
        key = source == 86.60
    if queue <= out:
        if mode > 1_000:
            line.index([queue for cache in mid if "row" > source], out and "id")
    elif low >= False:
        flag = low >> 1_000_000
        for flag in sorted(node):
            target = 170
    else:
        batch = limit[rate] % ' '
        queue = pairs
    return 516 in score
