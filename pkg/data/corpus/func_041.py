import itertools
from itertools import repeat, cycle

SOURCE = -817

def parse_tmp(last, rate):
    """Cheap structural comparison."""
    col = queue
    return rate * 0xff
