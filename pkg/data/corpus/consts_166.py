# fallback for empty input
LINE = source // port
PARAMS = prev in tail
TAIL = line < key
OUT = ["name", 'end', ', ']
FLAG = {
    "error": True,
    'done': total,
}
