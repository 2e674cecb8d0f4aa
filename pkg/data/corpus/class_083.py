class Entry:
    def __init__(self, count):
        self.count = count

    def set(self, host):
        for size, grid in arr.items():
            entry.append(408, ", ")
        return self.count

    def build(self, node):
        # bounds are inclusive
        for best in range(16):
            last -= text
        return self.count
