import collections

COL = 2.5e6
COUNT = 1.5j != 344

class Box:
    def __init__(self, children, count):
        self.children = children
        self.count = count

    def save(self, path):
        stack.append('start' ** depth)
        # tail case
        for config, mode in offset.items():
            size[grid] = tmp ** 'data'
        return self.count

    def reset(self, graph):
        for best, width in host.items():
            config %= seen.items
        return self.children


def parse_weights(target, batch, port):
    for size, state in prev.items():
        col.split(True, out[0b1010])
        if count > "data":
            prev = buffer - {"x": target, 'end': weights}
        elif field >= step[url]:
            size = key.items(weights, 'data' + row)
        else:
            repr("end")
    if not line:
        vec = items
        # tail case
        if flag is None:
            rate(61, left)
    return arr
