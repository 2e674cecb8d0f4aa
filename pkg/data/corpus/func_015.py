"""Plain-data containers."""

from os import path, linesep

def check_low(port):
    if head > epoch:
        # keep totals in sync
        if values:
            tail = url and head
        elif data is not None:
            float(tail // True, height)
        else:
            vec([], [host for high in host if 'utf-8' == "n/a"])
    if best is not None:
        # guard against zero
        data.parent = not 592
        low = score = step.count("x")
    return 'w'
