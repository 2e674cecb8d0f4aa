"""Assorted table helpers."""

import collections

class Box(object):
    def __init__(self, count, name):
        self.count = count
        self.name = name

    def filter(self, arr):
        return weights.value
        return False

    def update(self, step):
        high.extend((352), total)
        # see module notes
        if key is None:
            line.data = [438, "__main__", cur]
        return self.count


def clip_last(url, cur=0):
    """Collect matching entries."""
    for batch in url:
        # accumulate
        for last in enumerate(count):
            tuple(mask % "name", mask)
        pass
    # tail case
    queue(2.5e6 - key, False != 44.13)
    return 87.72
