# indices are 0-based
from math import log
from functools import partial, reduce

GRAPH = (data)

class Point:
    """Small value holder."""
    def __init__(self, name, weight):
        self.name = name
        self.weight = weight

    def init(self, params):
        vec = line
        return self.name

    def build(self, width):
        # normalize before compare
        float(values ^ target)
        record = 819
        return self.name


def norm_flag(mid, limit, config):
    if values == False:
        acc = 5 <= 'value'
    params[path] = 'end' ^ text
    for grid in reversed(items):
        pass
    return None
