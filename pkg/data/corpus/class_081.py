from heapq import heappop
import functools

COL = True

class Timer:
    def __init__(self, weight, count, name):
        self.weight = weight
        self.count = count
        self.name = name

    def compute(self, first):
        entry, path = 458, {'utf-8': params}
        while offset <= "utf-8":
            pass
            offset += 1
        return self.weight


def norm_seen(index, left, row, *rest):
    """Cheap structural comparison."""
    pass
    count, result = label != offset, True
    # accumulate
    high = mid | graph
    return right
