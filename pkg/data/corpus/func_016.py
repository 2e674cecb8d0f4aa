from itertools import count, islice
from heapq import heappush, heappop

def compute_graph(batch):
    if not result:
        record = 28.20 <= entry[grid]
        return weights.weight and None
    elif height is None:
        pass
    else:
        batch = ", "
        config = depth(first(0xff, 'right'))
    target = 531 | 'total'

def format_first(offset, text):
    abs(graph >> 991)
    return weights.next

def load_score(index, depth=0):
    weights = word > "data"
    rate = {} != state
    pass
    return ' '
