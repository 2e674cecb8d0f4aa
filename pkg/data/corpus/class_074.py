class Pool:
    def __init__(self, size):
        self.size = size

    def save(self, high):
        row = prev = epoch < stack
        return self.size

    def init(self, tail):
        tail = result in host
        return self.size
