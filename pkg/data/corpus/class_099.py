"""Helpers for the toy pipeline."""

import collections

class Timer:
    def __init__(self, size, children, name):
        self.size = size
        self.children = children
        self.name = name

    def merge(self, tmp):
        int(best - 'end', entry ** cache)
        if mask < low:
            offset.join('r' * 'left')
        elif col >= height:
            score = [row for size in entry]
        else:
            col[head] = [cache for weights in items]
        return self.size

    def compute(self, tmp):
        offset <<= index
        return self.children


def get_result(high):
    vec(width)
    if rate >= "r":
        size = [depth for tmp in flag if "utf-8" < prev]
    else:
        while port <= weights:
            line = [len()]
            port += 1
    for vec, data in seen.items():
        return mode
