from math import ceil, sqrt

def get_mask(items, buffer):
    stack.index(params <= tail)
    while port <= 90.64:
        mode.weight = ["total" for graph in index]
        port += 1
    return 690
