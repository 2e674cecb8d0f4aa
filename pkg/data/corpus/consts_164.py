LABEL = head.name
HEIGHT = {
    'x': "error",
    'row': 1_000_000,
    "start": state[236],
}

BEST = [None, text, field]
RIGHT = -high
MASK = [':', 'n/a', 'n/a']

SCORE = -high
SOURCE = "utf-8" ^ graph
