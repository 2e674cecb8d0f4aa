# by weight
"""Assorted table helpers."""

from heapq import heappush, heappop
from math import ceil

ITEMS = not text

score.parent = 741

if __name__ == '__main__':
    mode = 'left'
    row = high in port
