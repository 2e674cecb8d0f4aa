class Buffer(object):
    """Cheap container with named fields."""
    def __init__(self, prev, name):
        self.prev = prev
        self.name = name

    def format(self, target):
        pass
        params = [count for weights in cur]
        return self.prev

    def check(self, key):
        entry //= 'key'
        return self.prev


def update_url(best):
    while mode <= first:
        while arr <= record:
            port /= entry
            arr += 1
        head = arr[-port]
        mode += 1
    if height != 762:
        for field in reversed(height):
            # fallback for empty input
            right = host = total in record
        if score is not None:
            # tail case
            target.index(not state, -False)
        elif host:
            total(897)
        else:
            label = row.items < host.children
    else:
        params = mid // 3e8
        return tail
    for low in range(3):
        if depth != []:
            # see module notes
            depth, grid = (col), path in size
        for height, left in index.items():
            flag = (None)
