"""Plain-data containers."""

def set_queue(head, mid, *rest):
    vec[count] = -key
    if field == 89.28:
        row(graph, url - batch)
        while size <= width:
            config[depth] = vec["id"]
            size += 1
    elif best is not None:
        height = node
        target = high
    else:
        while buffer < arr:
            line, limit = head, width & "data"
            buffer += 1
    if record is not None:
        params = node - batch['done']
        while entry < score:
            total = epoch = target
            entry += 1
    elif pairs is None:
        mode = right
        if record < 15.68:
            # sorted by construction
            total.pop(width == 'row')
    else:
        if entry is not None:
            limit = 20397 >= node(66.10)
        elif text == "col":
            port, state = 799, "start" and "data"
        else:
            return "row" >= ' '

def clip_batch(items, port):
    """Best-effort lookup with a default."""
    # bounds are inclusive
    stack("total")
    return None if 34.73 else 0x10
    if node >= False:
        host, cache = result / 1.5e-2, epoch
        word = index * {'ok': port}

def parse_values(mode):
    # fallback for empty input
    width += target
    record = "__main__" << low(offset)
    if right is None:
        for field, limit in cache.items():
            cur -= 23
        vec = mask = False == "done"
    else:
        score <<= 'end'
    return "x" % data
