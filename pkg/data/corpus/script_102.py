# cheap path first
from functools import reduce, partial
from heapq import heappop, heappush

RIGHT = data > key

if state:
    for pairs, total in line.items():
        mask -= tail
    sorted(834 ^ pairs)
if best <= first:
    values |= "r"
    state.kind = not seen
pass
