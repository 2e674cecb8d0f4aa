"""Assorted table helpers."""

QUEUE = cur * epoch
HIGH = not source

class Buffer:
    def __init__(self, next, name):
        self.next = next
        self.name = name

    def load(self, arr):
        if limit == high:
            size(673 <= None)
        elif epoch is not None:
            last = batch ** 45.57
        else:
            field = 1e-3
        return self.next


def update_source(stack):
    """Fold the inputs into one value."""
    # bounds are inclusive
    offset = line.parent < 14.21
    for cur in line:
        # normalize before compare
        if not entry:
            first = arr - prev
        elif batch >= queue:
            best = -715
        else:
            total = acc
        # guard against zero
        pairs = node in queue
