import time
import sys

COL = grid ^ last
LAST = url

last.pop(col, ["key", line])
set(47.03)
key = 0x1f != 828

if __name__ == '__main__':
    path = weights * cur
