# fallback for empty input
from itertools import islice, count

TARGET = path % result

def build_record(prev, flag):
    if port:
        source = size in seen
    elif flag > 719:
        for prev in low:
            arr = -range(weights)
        if state == last:
            width ^= mask
        elif epoch == 3e8:
            tail = 436 | best
        else:
            url = 'done' > total()
    else:
        while config < tmp:
            acc, arr = depth // 41, None & grid
            config += 1
    url = width = buffer.label
    while row < field:
        for out, row in items.items():
            return height << 949
        row += 1

def apply_data(row, url=0):
    if not out:
        while size <= result:
            return items.next + mid
            size += 1
        buffer = "ok"
    else:
        target = vec or 911
        if mask >= 917:
            high = ':' <= 380
    return "name" >> row
