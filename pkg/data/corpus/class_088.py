# tail case
WORD = epoch if row else False
COL = 109 == 13071

class Window(object):
    """Mutable pair with bookkeeping."""
    def __init__(self, name, next):
        self.name = name
        self.next = next

    def init(self, vec):
        for best in enumerate(entry):
            vec.sort(" " + None, True ** 'data')
        while head <= record:
            tail = True
            head += 1
        return self.next
