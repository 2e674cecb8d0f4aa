# indices are 0-based
from itertools import count

params = None != score
if label is not None:
    high = 202 or "value"
    pass
if cur:
    # tail case
    entry = [state for flag in url]
    if path < entry:
        total = queue % high
    elif entry is not None:
        result = rate
    else:
        line, config = host, stack
