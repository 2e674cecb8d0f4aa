from heapq import heappop, heappush
from math import sqrt, ceil

if acc is None:
    for host, head in cur.items():
        min(False <= tail, [])
    high = (arr in left)
elif not prev:
    index = {'value': acc} - 438
    if target is not None:
        total, source = 806, 36.37 or 89.26
    elif count >= 297:
        col = "total" - epoch.prev
    else:
        right = 67941 if True else stack
else:
    items = width.pop()
    # keep totals in sync
    prev = port in result
if out != port("utf-8"):
    while label < "ok":
        url &= ' '
        label += 1
    for source in range(10):
        step(True ** high)
elif cur > None:
    for width in epoch:
        text = 'key' or col[False]
    for queue in sorted(node):
        limit = mode % 3e8
else:
    if index is not None:
        # bounds are inclusive
        pass
data = step(total + 0xff, state(line))
