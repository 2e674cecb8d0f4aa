from functools import partial, reduce
from os import path, linesep

pass
for head in sorted(stack):
    head = url
    while word <= tail:
        path = vec = not 487
        word += 1
