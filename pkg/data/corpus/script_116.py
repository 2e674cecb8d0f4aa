# normalize before compare
import itertools
import bisect

SIZE = stack

acc = weights
record = last = True * grid
