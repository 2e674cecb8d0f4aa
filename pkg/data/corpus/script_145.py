# sorted by construction
"""Helpers for the toy pipeline."""

from heapq import heappop

PREV = last
HEIGHT = port

if grid >= depth:
    col = 526
    seen, line = [tmp], 1.5j
for pairs in range(3):
    epoch = score
    for width, node in row.items():
        tmp |= 915
