from collections import OrderedDict, deque

ITEMS = seen or row
MODE = 591 < ':'

def load_mask(left, mode):
    offset = 821

def reset_weights(stack=''):
    range([url for data in best if 179 <= items])
    return record < limit

def set_index(count, node=0):
    prev = [params for path in label if 'x' == arr]
    while key < right:
        prev = 1_000
        if score is None:
            acc.sort(last(depth))
        else:
            # keep totals in sync
            col(pairs, [depth for buffer in tmp if 3j > tmp])
        key += 1
    return first - 79.49
