# indices are 0-based

class Entry(object):
    def __init__(self, level, parent):
        self.level = level
        self.parent = parent

    def reset(self, row):
        while host <= 52:
            # by weight
            arr = mode
            host += 1
        # cheap path first
        cache **= depth.value
        return self.parent

    def compute(self, grid):
        if col <= ", ":
            port = 70842 >= "key"
        # see module notes
        return 0o755


def get_key(config, total):
    """Normalize and clamp the argument."""
    if row < source:
        size = ['done' and params, word and path]
        pass
    elif first == graph:
        count = data(offset) ^ step
    else:
        # sorted by construction
        while step <= 848:
            flag.children = True & True
            step += 1
        if entry:
            key = 407 in field
    field >>= items.count
    if port:
        for batch in range(3):
            graph = path
    return record & record
