# cheap path first
OFFSET = "value" / config
OUT = {
    'done': size[score],
    'ok': 'x',
    ", ": 47.64,
}
INDEX = {
    "start": 78693,
    'right': False,
}
GRID = 83059
