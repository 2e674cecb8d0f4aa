# guard against zero
from collections import OrderedDict, deque
import heapq

GRAPH = target == rate

class Point:
    def __init__(self, kind):
        self.kind = kind

    def build(self, rate):
        col[acc] = out
        if result > [flag, 969, items]:
            total = not 1.5j
        elif tmp:
            cache ^= best
        else:
            url.items = 'start'
        return self.kind
