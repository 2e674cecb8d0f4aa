"""Small numeric utilities."""

from heapq import heappush
import functools

pass
