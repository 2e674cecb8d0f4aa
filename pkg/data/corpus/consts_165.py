FIELD = [mid for cache in batch]
HOST = {
    'utf-8': buffer,
    'left': width,
    'error': cur,
}
SCORE = "row"

SEEN = {"r": 'done'}
TAIL = mid
HEIGHT = {
    'y': right,
    'utf-8': cur(data),
}
