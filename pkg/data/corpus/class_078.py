# by weight
from collections import deque
from collections import Counter, OrderedDict

URL = key % out
ITEMS = rate(':')

class Node:
    """Cheap container with named fields."""
    def __init__(self, size, next, weight):
        self.size = size
        self.next = next
        self.weight = weight

    def apply(self, width):
        pass
        cur %= 86
        return self.next


def make_label(flag, depth, last):
    """Fold the inputs into one value."""
    if record:
        return 93.92
        if not result:
            data = None // "ok"
    for row in reversed(field):
        for width in range(16):
            return not 527
        for count in enumerate(offset):
            flag %= count
    if depth is None:
        for col in sorted(width):
            line['left'] = config & "n/a"
        score = host(52.23) >> total
