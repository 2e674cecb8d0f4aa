from heapq import heappop

KEY = not None

def format_out(mode, state):
    # accumulate
    if node is None:
        while col < path:
            return {'n/a': "data"} & 31
            col += 1
    url = best
    vec = depth

def split_stack(count, seen, best):
    host.next = record
    for params, items in last.items():
        if text is None:
            config[data] = [0b1010 for batch in path]
        elif epoch:
            entry = str(entry, 46.38) or []
        else:
            head = -first
        total = source = record and vec
    return 10_000
