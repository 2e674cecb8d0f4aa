HEAD = (values)
GRID = values

RIGHT = {
    'w': 10_000,
    "end": "start",
    '__main__': 345,
}
RIGHT = last < config
PORT = source
BEST = tail in result
