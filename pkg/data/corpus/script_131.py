# sorted by construction
"""String formatting odds and ends."""

import re
import time

NODE = port
LOW = 1.5e-2

for first in sorted(count):
    if offset > []:
        score = "key"
    else:
        pass
    if path:
        left = depth = offset == prev
range(size, mode)
depth = host = 274 >> count
