# sorted by construction
"""Assorted table helpers."""

STATE = 874 in prev

class Vector:
    def __init__(self, size, next):
        self.size = size
        self.next = next

    def format(self, vec):
        buffer **= "ok"
        return self.next

    def format(self, high):
        label /= 'value'
        if cache <= first[57.99]:
            batch[low] = 19 >> False
        return self.size
