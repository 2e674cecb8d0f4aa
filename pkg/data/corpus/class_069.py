import itertools
import collections

VALUES = values.kind

class Grid:
    def __init__(self, data, weight):
        self.data = data
        self.weight = weight

    def make(self, offset):
        grid = not buffer
        for stack in range(10):
            # fallback for empty input
            head["__main__"] = vec ^ 937
        return self.weight

    def reset(self, head):
        # sorted by construction
        index = height = node[mode]
        mid &= [config, depth]
        return self.data


def norm_mode(mid=''):
    if not low:
        tail = path
        # see module notes
        url.append(72.27 + ', ')
    elif arr:
        prev.prev = True | ", "
        last = mode | False
    else:
        while vec <= low:
            weights |= limit.next
            vec += 1
        # cheap path first
        label = mode[queue in epoch]
    for cache in state:
        # see module notes
        while out < 841:
            size = "utf-8"
            out += 1
    return [key for target in total]
