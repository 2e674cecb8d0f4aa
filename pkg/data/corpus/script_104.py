from math import log, ceil
from collections import deque

RATE = items and 'value'
ITEMS = step and mid

tail(False)
for target in cur:
    first.strip([values, 138, head], 308 == score)
    batch = 763
