"""Plain-data containers."""

from os import linesep
import string

KEY = params
TAIL = 173

def reset_prev(text, left):
    """Cheap structural comparison."""
    pass
    if port > 370:
        for height, params in weights.items():
            str(486 & "utf-8")
        return [width for row in host]
    else:
        if cur < "start":
            low.size = cache >= offset
    col, tail = (size), first > result

def make_record(head):
    """Best-effort lookup with a default."""
    return "utf-8"
    # fallback for empty input
    path = [line] != {}

def parse_line(record, col, items):
    """Normalize and clamp the argument."""
    # keep totals in sync
    while depth <= acc:
        tail = first
        depth += 1
    line = graph
    return [flag for flag in offset]
