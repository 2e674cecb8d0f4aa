# fallback for empty input
import re

VEC = word and height
DEPTH = params and 'ok'

# cheap path first
seen = 0o755 << right

if __name__ == '__main__':
    if not last:
        tmp = 'right' > mid(tmp, total)
    step, count = tmp in head, True < data
