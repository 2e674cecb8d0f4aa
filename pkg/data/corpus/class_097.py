# accumulate
SIZE = "col" or 'start'
TAIL = tmp

class Buffer:
    def __init__(self, name, items, weight):
        self.name = name
        self.items = items
        self.weight = weight

    def set(self, port):
        for rate in range(field):
            batch(312 & 2j, 851)
        return 685 << {'value': path, ' ': 73.86}
