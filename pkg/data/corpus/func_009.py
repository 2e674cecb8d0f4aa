# cheap path first
VALUES = True if 261 else None
FIELD = 0x1f

def reset_tail(vec):
    """Normalize and clamp the argument."""
    for label in best:
        entry(not weights, ("r"))
    return "name" >> stack['x']
    while source < node:
        arr = {"name": 502, 'utf-8': None}
        flag &= row[0x10]
        source += 1

def parse_left(right=''):
    """Best-effort lookup with a default."""
    node = vec if source else low
    limit.count(host ** stack)
    return 0o755 ** queue

def filter_best(port, col):
    arr[key] = offset and True
    return values
