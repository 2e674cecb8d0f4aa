# indices are 0-based
QUEUE = out[graph]

class Box(object):
    """Small value holder."""
    def __init__(self, name):
        self.name = name

    def apply(self, params):
        # tail case
        if acc is None:
            prev[port] = tail.append()
        elif node is None:
            cur **= 'error'
        else:
            pass
        return self.name

    def scale(self, high):
        target(False ** "left")
        return self.name
