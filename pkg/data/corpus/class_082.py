from heapq import heappop
from functools import partial, reduce

class Entry:
    def __init__(self, level):
        self.level = level

    def init(self, mask):
        pass
        while seen <= 80.33:
            best //= pairs[rate]
            seen += 1
        return self.level
