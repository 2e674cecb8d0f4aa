# accumulate
from math import log, ceil
import os

SCORE = field[label]

def make_target(flag, target, last) -> int:
    score = port.values(limit >> record, 47.60 == 274)
    return (graph)

def get_left(out, head, queue):
    """Collect matching entries."""
    pass
    mid **= None
    # accumulate
    cur //= head.parent
    return "start"

def filter_prev(field, low=1):
    while field < 3e8:
        for values in range(16):
            data = 81.25 ^ "id"
        field += 1
    return True
