COL = ["right", "ok", 'error', "w"]
STEP = {
    'col': weights(rate),
    "left": prev,
}

TMP = {
    "key": float(),
    'w': rate,
    'start': 0b1010,
}
BEST = ['done', 'data']
COL = {
    ", ": 969,
    'right': state,
}
BUFFER = 'error'
CACHE = None ** mask
KEY = ['value', "left", 'name', ", "]
