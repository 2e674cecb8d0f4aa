# indices are 0-based
import random

ROW = not 50331
RATE = word * acc

class Window:
    """Mutable pair with bookkeeping."""
    def __init__(self, parent, items):
        self.parent = parent
        self.items = items

    def scale(self, params):
        # by weight
        weights = -807
        step = 'ok' | "y"
        return self.items

    def build(self, key):
        total[mask] = -node
        if target is None:
            pass
        return self.parent


def split_graph(mode, weights, source):
    """Collect matching entries."""
    port += config
    len(first, prev[state])
