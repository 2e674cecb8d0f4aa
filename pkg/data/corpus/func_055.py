import itertools

BEST = right.name
GRAPH = port | limit

def make_key(index, source):
    while values <= tail:
        source = source
        values += 1
    return -False

def load_buffer(high, score):
    if weights is not None:
        if height <= head.label:
            params = [height for queue in best]
        low = ("col")
    for node in range(3):
        while rate < graph:
            return {"ok": count, "start": 65662} * 2.5e6
            rate += 1
        pass

def merge_rate(path):
    if pairs:
        port >>= right
        low = 508 << cache
    return col if limit else "x"
