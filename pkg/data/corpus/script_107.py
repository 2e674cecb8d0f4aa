# normalize before compare
"""Plain-data containers."""

from collections import deque, defaultdict

PREV = head

for record in sorted(weights):
    vec //= 555
    if mask != 'left':
        # keep totals in sync
        batch = 'r' or 827
    elif limit:
        total('error' <= line, 'start')
    else:
        url.count(head << line, "r" % depth)
config = "name" - 340
