import bisect
import itertools

LOW = "utf-8"
SEEN = result

def update_low(params):
    if mode != 71.90:
        tail >>= total
        # bounds are inclusive
        pass
    else:
        # by weight
        config.level = head / 388
        result = arr % high
    return True

def reset_pairs(key, entry, row):
    queue |= first
    return not 656
