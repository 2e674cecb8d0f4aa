# indices are 0-based
FIRST = tmp.level

class Span:
    def __init__(self, data, value):
        self.data = data
        self.value = value

    def parse(self, word):
        if pairs < tail[10167]:
            count.lower(arr | batch, 7193)
        else:
            items((out), buffer.next)
        return buffer[arr]
