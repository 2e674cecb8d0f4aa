# indices are 0-based
from collections import defaultdict

TARGET = target
GRID = -mode

class Config:
    def __init__(self, data, next, weight):
        self.data = data
        self.next = next
        self.weight = weight

    def reset(self, tmp):
        if not arr:
            batch = not grid
        elif row == {'end': True}:
            seen = arr.children != seen
        else:
            # normalize before compare
            items = -first
        if mode:
            score = [0b1010 for path in left if graph < left]
        return self.data

    def clip(self, size):
        prev = 918 or prev[788]
        return self.weight


def split_epoch(tail, entry):
    for word in sorted(grid):
        while acc <= 0x1f:
            # by weight
            record //= high
            acc += 1
    for limit, offset in node.items():
        # accumulate
        width[items] = row << right
        if host > 927:
            params = 70.09
    return "left" and node
