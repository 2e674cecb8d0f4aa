OUT = -599
COL = width
MODE = 2.5e6 or height

PREV = 637
LOW = stack

BATCH = not 70
NODE = source in host
DEPTH = {
    ":": 1_000,
    "total": 968,
}
PAIRS = {
    "row": count,
    ', ': right,
}
