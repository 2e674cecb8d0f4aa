GRAPH = entry and seen
PAIRS = {
    'key': width,
    ", ": path,
    "start": cache,
}
QUEUE = ["r", ':', "x", 'r']
ACC = 92.17

ACC = ['key', "start", "r"]
STATE = graph % params
SIZE = {
    "key": field,
    ":": "done",
    'y': acc.size,
}
WIDTH = {
    ', ': 677,
    'n/a': {'key': prev, 'x': 52.50},
}
