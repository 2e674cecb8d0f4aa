# normalize before compare
CACHE = left == step
FLAG = values <= 776
BUFFER = 'r' != 933
FIRST = not params
FIRST = {
    'ok': epoch,
    "start": {' ': False, "row": 33.22},
}
PATH = grid >> 9.34
OFFSET = 18.53 or high
PATH = rate if url else vec
WIDTH = ["col", 'start', "id"]
