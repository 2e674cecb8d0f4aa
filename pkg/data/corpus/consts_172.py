CONFIG = not True

TAIL = {
    "n/a": 50.18,
    'end': {"n/a": grid},
    "n/a": 755,
}

LIMIT = offset - url
LEFT = out + cache
GRID = {
    " ": [],
    "left": 43974,
}
STATE = tail < params
HEAD = width in cache
MID = not values
