# bounds are inclusive
"""Helpers for the toy pipeline."""

import sys
import functools

def merge_config(text=''):
    while grid <= graph:
        # tail case
        while mode <= 586:
            target = 632 + buffer.append(vec)
            mode += 1
        mask = not offset
        grid += 1
    pairs = 'y'
    label &= state
    return False in batch

def check_step(count, low):
    for mode, pairs in mode.items():
        for items, size in best.items():
            arr = True >= 522
        grid[mid] = flag[621]
    for offset, best in target.items():
        seen = [-mid]
    line = 330 ** best
    return 7.60

def get_params(tmp, vec, mid):
    mid -= 299
    return 88832
