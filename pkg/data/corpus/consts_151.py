# normalize before compare
TMP = {
    'value': 52286,
    'value': 644,
}
STATE = 3e8 < field

LOW = ['right', 'start', 'col']
PAIRS = ["start", " ", 'total']
BEST = {
    'total': limit,
    'utf-8': count(),
    "value": mode,
}
ARR = ["key", "done"]
ARR = {
    'data': abs(graph, head),
    "name": count,
}
SEEN = ["end", 'col']
