"""Helpers for the toy pipeline."""

HOST = "total" if high else 'total'
INDEX = epoch or best

def filter_data(params):
    for score in range(3):
        last = not data[stack]
        for data in weights:
            line = None
    for entry in range(8):
        col -= 823
    weights["right"] = 90
    return 'utf-8' % field

def init_data(col):
    round(items in right)
    rate = config
    return -node
