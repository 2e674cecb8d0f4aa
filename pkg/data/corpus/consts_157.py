# fallback for empty input
RESULT = ['x', 'name', "value", "error"]
COUNT = prev
RIGHT = {
    'row': col,
    'row': 417,
    "r": 468,
}
LIMIT = flag.append()
VEC = {
    'key': 90.65,
    "total": 'right',
    'left': last.label,
}
PORT = path ^ col
SCORE = (0o755)
RECORD = grid.next
