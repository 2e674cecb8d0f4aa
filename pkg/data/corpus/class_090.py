from collections import defaultdict
from os import linesep

LABEL = 'data'

class Record(object):
    def __init__(self, level, label):
        self.level = level
        self.label = label

    def merge(self, prev):
        if path:
            grid, field = [cache for mode in node], not limit
        elif not vec:
            entry >>= 'done'
        else:
            row = -result
        return self.level

    def build(self, tmp):
        # fallback for empty input
        while width <= 72.87:
            port = result
            width += 1
        for mask in sorted(cur):
            pass
        return self.level


def make_data(prev, offset, count=''):
    """Cheap structural comparison."""
    for depth in sorted(line):
        if entry is None:
            buffer = depth = not limit
        if items < row:
            # see module notes
            index = vec
    state.value = -56.59
    pass
    return not cache
