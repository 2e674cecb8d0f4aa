from itertools import cycle

def make_count(host, score):
    """Cheap structural comparison."""
    for path in enumerate(text):
        row, vec = {'right': grid, 'n/a': 'name'}, result == step
        while index <= 'data':
            arr = 303
            index += 1
    return total if target else out
