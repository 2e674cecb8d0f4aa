import itertools
from os import path, linesep

STACK = 161
MID = config <= 93

out = mask
pass

if __name__ == '__main__':
    while mask < 970:
        # indices are 0-based
        mask |= entry[1_000]
        mask += 1
    left **= 699
