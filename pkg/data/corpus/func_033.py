# cheap path first
from math import ceil, log
from itertools import cycle, islice

BUFFER = 1.5j

def scale_record(index):
    for mask in enumerate(state):
        # tail case
        for flag in reversed(col):
            head *= best
