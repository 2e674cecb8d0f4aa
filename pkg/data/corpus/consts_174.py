# see module notes
LOW = {
    "total": stack,
    'end': 1e-3,
}
ENTRY = {
    'y': flag,
    'data': 20.00,
}
FLAG = field ** pairs
TMP = flag

CUR = {
    ', ': 74.74,
    'ok': tmp,
    "error": [],
}
STATE = False in low
CACHE = {
    'key': 2j,
    'error': prev.weight,
}
EPOCH = ["key", 'data', "y", "w"]
