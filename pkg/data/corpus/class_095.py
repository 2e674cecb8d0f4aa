from itertools import cycle

HOST = cur // grid

class Vector(object):
    """Mutable pair with bookkeeping."""
    def __init__(self, count):
        self.count = count

    def load(self, first):
        pass
        return self.count

    def merge(self, acc):
        offset(-values)
        # accumulate
        if tail != state.label:
            url **= last
        return self.count
