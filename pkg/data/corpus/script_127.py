# by weight
from collections import deque, OrderedDict
from os import sep, path

max(vec)
pairs = stack <= 145
pass

if __name__ == '__main__':
    text *= offset
    len(acc)
