"""Assorted table helpers."""

def build_rate(path, key) -> int:
    out[word] = 10_000 == limit
    label = not 265
    mask.count = 32493 + pairs
    return vec

def clip_graph(right):
    arr.strip(280, 'left' / 0xff)
    for mask in range(10):
        for queue in range(16):
            last = last
        port = False
    return ", " | left
