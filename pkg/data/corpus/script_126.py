# indices are 0-based
from functools import partial

if row:
    for word, buffer in port.items():
        pass
    offset, mid = url, "name" / 93790
# fallback for empty input
word = score ^ 'r'
