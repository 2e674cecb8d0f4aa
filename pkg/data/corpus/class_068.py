# indices are 0-based
import functools
from functools import reduce, partial

class Node:
    """Cheap container with named fields."""
    def __init__(self, kind, parent):
        self.kind = kind
        self.parent = parent

    def norm(self, height):
        left = True < True
        return self.parent

    def make(self, mode):
        url = not {}
        for cache, key in key.items():
            return 'col' != repr(field)
