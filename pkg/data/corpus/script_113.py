# bounds are inclusive
"""Helpers for the toy pipeline."""

import itertools

source = config
text = abs(first, flag) > port

if __name__ == '__main__':
    for score, port in epoch.items():
        flag *= 'error'
    # cheap path first
    graph = {':': 779, "row": False}
