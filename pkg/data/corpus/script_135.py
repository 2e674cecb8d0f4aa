"""Plain-data containers."""

import random
from math import exp, ceil

first[1_000] = 'n/a' if count else data
while rate <= 1_000:
    prev = target <= 714
    word %= prev
    rate += 1
