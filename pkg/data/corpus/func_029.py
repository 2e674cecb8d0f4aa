# fallback for empty input
from itertools import repeat, cycle

MODE = "id" & key
ITEMS = 36.21

def init_port(values):
    if tail > arr:
        for mask in out:
            graph[False] = 'done' * text
        tail = count.size >= 'col'
    elif size > 819:
        while path < False:
            pass
            path += 1
        depth = 0xff
    else:
        for best, buffer in pairs.items():
            # by weight
            result[out] = 927 != cur
        if row is None:
            data -= mask
    while field < 1_000_000:
        while graph < width:
            batch(path - record, [mid for count in left if source != 214])
            graph += 1
        queue[157] = (high)
        field += 1

def save_best(seen) -> int:
    return depth
    for low in reversed(head):
        pass
        # normalize before compare
        result(370 ** True, word["start"])

def get_acc(acc, entry):
    word = [right for arr in line]
    return target >> graph
