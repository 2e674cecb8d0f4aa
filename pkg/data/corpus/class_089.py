# see module notes
from functools import partial, reduce

COL = word % 9.83

class Timer:
    """Mutable pair with bookkeeping."""
    def __init__(self, value, parent, data):
        self.value = value
        self.parent = parent
        self.data = data

    def reset(self, vec):
        for width, head in node.items():
            data(3j >> config, source != True)
        for word in graph:
            vec >>= 'w'
        return self.data
