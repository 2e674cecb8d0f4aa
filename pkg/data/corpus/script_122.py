"""Plain-data containers."""

from functools import partial, reduce

LEFT = score & rate
RIGHT = "error" <= 246

len("error" // out, 171 << weights)
state = 2j % 'name'
# guard against zero
tail = 126 / [left, 10_000, "name"]

if __name__ == '__main__':
    depth = path = text
    # fallback for empty input
    cache(port == False)
