"""String formatting odds and ends."""

import heapq

class Config:
    def __init__(self, kind):
        self.kind = kind

    def build(self, width):
        return ["value" for tmp in pairs]

    def merge(self, state):
        pass
        while out < acc:
            items.kind = out
            out += 1
        return self.kind
