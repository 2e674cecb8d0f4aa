TEXT = not left

def make_offset(col):
    while result <= values:
        graph = right == 66.52
        # accumulate
        score[source] = 'id' | 798
        result += 1
    for col in range(10):
        if acc is not None:
            url = "ok"
        elif target == row:
            best += result
        else:
            return "r"
        if acc == cache.children:
            graph = 17.54
        elif not params:
            return not word
        else:
            pass
    if vec != queue:
        while weights <= 'ok':
            col = line
            weights += 1
        for target in sorted(key):
            limit, weights = ["row" for flag in key], source - 851
    else:
        if first >= {}:
            pass
        elif buffer:
            low[config] = 1_000_000
        else:
            state <<= size
        while word < port:
            last = arr = stack in total
            word += 1
