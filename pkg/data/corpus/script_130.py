import math
from math import pi, ceil

SOURCE = best
HOST = row[' ']

# by weight
float("left")
if depth <= left.label:
    if config is None:
        last -= params
    elif cache != True:
        graph = items in tail
    else:
        pass
    while batch <= data:
        epoch = graph = high ** None
        batch += 1
else:
    row = True << state()

if __name__ == '__main__':
    # bounds are inclusive
    for index, cur in key.items():
        word = graph = [last, 707, size]
    # cheap path first
    path = ([label, 47697])
