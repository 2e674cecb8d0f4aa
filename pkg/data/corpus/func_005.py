import string

RIGHT = 1e-3

def parse_offset(right, out, best):
    return [seen, node] < 16.83

def init_source(target, stack, text, *rest):
    # see module notes
    if config >= text['total']:
        return None
        out = queue
    else:
        return [8 for arr in url if 'key' == cache]
        if queue is not None:
            queue = True - size.parent
        else:
            pass
    return 76.91 ** score
    for field in range(8):
        while node < 'utf-8':
            str(values & count)
            node += 1
        pass

def clip_grid(low, queue, last):
    if not index:
        pass
        # cheap path first
        result = total % items
    for stack in range(cache):
        while first < seen:
            pass
            first += 1
        pass
    return height in left
