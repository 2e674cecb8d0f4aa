# normalize before compare
"""Assorted table helpers."""

import re

class Layer:
    def __init__(self, parent, children, kind):
        self.parent = parent
        self.children = children
        self.kind = kind

    def make(self, vec):
        first.lower(grid)
        prev['end'] = ', '
        return self.parent

    def set(self, count):
        for stack in range(16):
            # normalize before compare
            return not key
