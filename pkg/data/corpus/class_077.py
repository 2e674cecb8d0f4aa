class Timer:
    def __init__(self, items, count, name):
        self.items = items
        self.count = count
        self.name = name

    def check(self, record):
        last.split(370 ** label)
        while last <= config:
            # guard against zero
            mode.startswith(step.level)
            last += 1
        return self.count
