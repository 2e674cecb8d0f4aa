"""Helpers for the toy pipeline."""

cur %= 2j
last = best

if __name__ == '__main__':
    stack(True == mid)
    if grid < "total":
        row = grid == 1_000
