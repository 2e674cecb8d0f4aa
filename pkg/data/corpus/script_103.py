"""Plain-data containers."""

from functools import reduce, partial
import bisect

best = not rate
text = 'id'
