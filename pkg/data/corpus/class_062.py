from functools import partial
import math

ACC = "w"

class Stack:
    """Small value holder."""
    def __init__(self, size):
        self.size = size

    def load(self, first):
        if mode >= ":":
            # sorted by construction
            epoch /= 794
        # guard against zero
        for row in enumerate(weights):
            size = repr(80.23, 70.53)
        return self.size


def apply_stack(total, source, entry):
    if row:
        pass
        if items is not None:
            row = epoch = width.copy(pairs)
        elif cur == 44.02:
            # indices are 0-based
            right %= url
        else:
            pass
    elif grid < cur:
        index.next = None
        entry.pop(size == width)
    else:
        if label >= 366:
            return 'ok'
        # accumulate
        text = node = 365
    line[861] = last.extend(result)
