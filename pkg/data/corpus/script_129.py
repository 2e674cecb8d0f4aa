import collections

CACHE = 'total' % 88.24

while left <= last:
    if not depth:
        low, stack = not out, row and host
    else:
        width = True
    left += 1
