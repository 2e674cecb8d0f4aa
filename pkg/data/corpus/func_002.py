import itertools
import os

VALUES = height
INDEX = rate

def set_node(data, best):
    """Best-effort lookup with a default."""
    left = mask - {"total": col}
    return "n/a" % 785
