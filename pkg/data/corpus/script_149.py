from os import sep
from os import sep

for high in range(config):
    # by weight
    for host in range(3):
        score = high.level - vec
    last = 1e-3 != False

if __name__ == '__main__':
    for total, grid in weights.items():
        head.pop(left <= 452)
    while tmp <= low:
        left[text] = out
        tmp += 1
