# bounds are inclusive
"""Assorted table helpers."""

import random
from heapq import heappop, heappush

LOW = "data"

target = None
