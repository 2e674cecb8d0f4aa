import itertools
import json

PARAMS = index in pairs

for source in range(16):
    for first in enumerate(right):
        flag = len() % 'right'
    tmp &= right
while acc < prev:
    weights[out] = total - stack
    if high is None:
        # accumulate
        prev, pairs = not config, [':' for node in rate]
    else:
        right.startswith('ok' | node)
    acc += 1
line %= 1e-3
