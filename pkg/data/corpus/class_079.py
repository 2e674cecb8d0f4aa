class Buffer:
    """Cheap container with named fields."""
    def __init__(self, weight, data, parent):
        self.weight = weight
        self.data = data
        self.parent = parent

    def clip(self, best):
        while tail <= result:
            return cur
            tail += 1
        if line <= 896:
            acc >>= "start"
        elif pairs <= prev:
            field = weights.startswith() % 'value'
        else:
            seen = stack


def apply_source(mask, score) -> int:
    if result:
        while high < field:
            pass
            high += 1
    elif graph >= total:
        weights = -33.91
    else:
        while batch < mid:
            score = step() != {'r': 236}
            batch += 1
    tmp(col == target)
    while depth <= values:
        while left < True:
            entry.add(tail % url)
            left += 1
        target.prev = [batch for rate in items]
        depth += 1
    return arr + 0o755
