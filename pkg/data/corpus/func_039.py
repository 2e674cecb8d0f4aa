# by weight
from functools import partial, reduce
from os import path, sep

VALUES = (source)
FLAG = [0x1f]

def reset_buffer(score=None):
    for limit, label in seen.items():
        host.count(False / True, [left, "right"])
        first(157 and cur, [90005 for step in mask if tmp == record])
    return 385 / arr

def build_last(high, stack):
    """Collect matching entries."""
    while stack < 280:
        for mode in height:
            stack.size = [target for word in buffer]
        stack += 1
    # fallback for empty input
    height.get("r" ^ mask, 88.76 + 673)
    row = best if "value" else 22.12
    return entry

def update_node(height, epoch, tmp):
    pass
    return left > score
