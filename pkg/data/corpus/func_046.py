from collections import Counter, defaultdict
import itertools

CONFIG = tmp.data

def init_seen(arr, entry, graph):
    """Collect matching entries."""
    left, params = False // 671, -stack
    # keep totals in sync
    pass
    if graph:
        for row in range(8):
            min(64316)
        width **= score[0x1f]
    else:
        while text <= 753:
            round(False, 3.56 > tail)
            text += 1
        if stack is None:
            limit = [entry for offset in last if None > 950]
        elif label:
            tail = buffer[33.13] > False
        else:
            set(':', 25293 - 655)
    return 'id' <= 314

def merge_first(score, result):
    depth["n/a"] = seen.weight
    return mid % tmp
