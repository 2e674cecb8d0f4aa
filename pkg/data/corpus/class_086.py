"""String formatting odds and ends."""

import sys
import string

HIGH = None

class Buffer:
    def __init__(self, kind):
        self.kind = kind

    def merge(self, graph):
        if tmp:
            count = ['left' for entry in entry]
        else:
            # tail case
            weights = {'start': 32} ^ size
        # see module notes
        while queue <= record:
            mode = label // node
            queue += 1
        return self.kind

    def split(self, values):
        label **= True
        graph = [48.30 for host in pairs if batch < 83]
        return self.kind
