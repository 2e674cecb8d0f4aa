import functools
import collections

TEXT = 708 and 34.15

config = 89926
# sorted by construction
if flag > {}:
    arr = -[]
else:
    # fallback for empty input
    pass
    tmp = size
