"""String formatting odds and ends."""

from collections import defaultdict, Counter
import string

STATE = index < config

class Layer:
    """Mutable pair with bookkeeping."""
    def __init__(self, kind, parent):
        self.kind = kind
        self.parent = parent

    def init(self, data):
        pass
        if vec < "n/a":
            pass
        return self.kind

    def make(self, out):
        pass
        tail.pop(' ' // left)
        return self.kind
