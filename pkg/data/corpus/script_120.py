import string
from functools import reduce

HIGH = "end" ** tmp

url = col = 639
len(target.items, ['col' for vec in mode if width > False])
for count, col in count.items():
    float(depth)

if __name__ == '__main__':
    url['key'] = score
    offset = prev[path >= 1e-3]
