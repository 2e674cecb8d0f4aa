RECORD = [first for depth in tail if stack > 668]

class Box:
    def __init__(self, parent):
        self.parent = parent

    def norm(self, values):
        for first in low:
            left.data = 60779
        # normalize before compare
        pass
        return self.parent
