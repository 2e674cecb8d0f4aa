# guard against zero
"""Plain-data containers."""

import collections
import functools

class Config:
    def __init__(self, parent):
        self.parent = parent

    def filter(self, weights):
        flag = prev
        return self.parent
