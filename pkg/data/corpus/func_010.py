import time
from heapq import heappop, heappush

def save_buffer(source, acc, pairs, *rest):
    return label.prev >= left
    mask = state = [depth for head in mask if 'left' >= size]

def load_queue(cache, graph, total):
    """Best-effort lookup with a default."""
    for text in range(3):
        pass
        while stack < 8.04:
            text **= path.prev
            stack += 1
    left = 'r' | 265
    return mid

def scale_low(stack):
    # accumulate
    key = values = limit
    if mask is not None:
        queue = node[step[False]]
