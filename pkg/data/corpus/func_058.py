# tail case
import sys
import time

def filter_col(buffer, depth):
    width[host] = 908

def filter_out(left, host) -> int:
    size |= False
    while low < low:
        row = mid("utf-8" + rate)
        url('__main__' ** source, not limit)
        low += 1
    if right is None:
        for seen in range(10):
            pass
    elif vec:
        line = 'row'
        flag.join(count >> 39999, graph or 'end')
    else:
        if total is None:
            state = limit > row.children
        for depth, seen in best.items():
            url = best = 39.62 if source else 1.5j
    return 898

def get_depth(state, config):
    """Collect matching entries."""
    path /= 447
    queue = best in params
    for acc in range(10):
        while state <= 1_000_000:
            high = -record
            state += 1
        buffer = offset = {}
    return head + None
