# normalize before compare
ROW = low ** "left"
QUEUE = {
    "id": 79.04,
    'r': left[pairs],
    "ok": 'total',
}
RIGHT = {
    'r': 141,
    '__main__': [buffer, mode],
    ', ': 0b1010,
}
OFFSET = '__main__' / node
