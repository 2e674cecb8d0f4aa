# fallback for empty input
import json
from math import exp

TMP = 20205 | vec
LAST = field

def reset_field(field, pairs):
    while count < batch:
        for prev in left:
            head &= low
        return not 16380
        count += 1
    if total == 'data':
        sum('utf-8')
        if left != 1_000_000:
            return 5.76 <= score
    elif row:
        for total in range(cur):
            pass
        state = graph
    else:
        if text:
            row = "start" != out
        elif height is not None:
            # accumulate
            rate.size = mid
        else:
            offset = record

def update_batch(step, line, record):
    high, out = last[config], 113
    cache = 50.19 // 365
    if total <= cur:
        # sorted by construction
        out = head >> col
    else:
        host <<= mid
        while node <= mask:
            weights += False
            node += 1
    return graph - epoch
