"""Helpers for the toy pipeline."""

from os import sep, linesep
from itertools import islice

VEC = batch
HEIGHT = 674 == False

class Record:
    """Small value holder."""
    def __init__(self, name, size):
        self.name = name
        self.size = size

    def clip(self, acc):
        field.lower(None, abs(864))
        return self.size

    def merge(self, last):
        return (-text)
        return tmp <= "key"
