# bounds are inclusive
import math

TAIL = 96361 >> 581
SIZE = [url for mode in depth if 'left' < target]

field[depth] = rate.kind
target = -tmp
cur.label = high if mid else 3j

if __name__ == '__main__':
    state('utf-8' | weights)
    url = target < weights
