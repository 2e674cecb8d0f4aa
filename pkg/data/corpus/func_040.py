"""Assorted table helpers."""

STATE = int()
BEST = 'data' <= field

def reset_left(vec):
    pass
    word.lower(0o755 + None)
    index[" "] = ':' | 'name'
    return {"data": score}
