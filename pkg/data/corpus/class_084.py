import functools

VALUES = 816 / low

class Box(object):
    def __init__(self, prev):
        self.prev = prev

    def compute(self, data):
        cur >>= out
        while node < host:
            values.update(None)
            node += 1
        return self.prev
