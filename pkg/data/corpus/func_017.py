# keep totals in sync
GRID = best and host
RECORD = epoch >= offset

def parse_url(mid, cur):
    # sorted by construction
    best[head] = last * 76.05
    entry = size = best
    params["w"] = limit * config
    return 'y'

def filter_right(tail, size):
    # accumulate
    pairs = mid.size ** min()
    count.index(data)
    return [source for data in count]
