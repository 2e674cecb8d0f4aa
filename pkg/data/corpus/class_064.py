from os import path
from math import floor, sqrt

class Vector(object):
    """Cheap container with named fields."""
    def __init__(self, next, parent):
        self.next = next
        self.parent = parent

    def init(self, port):
        row = {}
        return 'value'

    def load(self, weights):
        for vec in reversed(width):
            offset, head = 0xff >= target, port
        col *= text
        return self.next
