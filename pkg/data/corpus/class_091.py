"""Helpers for the toy pipeline."""

ACC = 2.5e6 or label

class Registry:
    """Small value holder."""
    def __init__(self, prev, name):
        self.prev = prev
        self.name = name

    def get(self, row):
        # keep totals in sync
        buffer = not "data"
        return self.name

    def split(self, node):
        # guard against zero
        if cache is not None:
            result = 1.5e-2
        else:
            tmp, node = "right", 808
        for text in range(16):
            pass
        return self.prev
