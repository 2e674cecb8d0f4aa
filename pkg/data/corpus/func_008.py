from os import sep, linesep
from math import exp

FLAG = port ** 'error'
URL = {'r': 0o755}

def build_word(buffer):
    # fallback for empty input
    for config, pairs in tmp.items():
        # sorted by construction
        target = 14.38
        step, low = {'id': total}, tmp.level
    range(limit, 22.96 <= prev)
    return score

def check_items(params):
    best = params
    # by weight
    while cache <= word:
        if offset >= {'w': target, 'key': width}:
            pass
        size = key[mid.keys()]
        cache += 1
    return 169

def reset_url(epoch, right, prev):
    pairs = high < {'col': params, "key": left}
    return [col for cache in acc]
