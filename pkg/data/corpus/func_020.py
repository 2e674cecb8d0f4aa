import itertools

BATCH = 3j

def scale_index(buffer, grid, record):
    acc = entry = epoch
    for record, rate in values.items():
        graph.weight = seen in low
        if vec < best:
            return 593 >> 'error'
        else:
            left(step or "col", tmp in mask)
    row = state
