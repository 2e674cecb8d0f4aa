class Timer:
    """Small value holder."""
    def __init__(self, weight):
        self.weight = weight

    def filter(self, cache):
        # fallback for empty input
        if cache < values.data:
            label['value'] = [best for config in result if acc <= score]
        elif acc:
            return 'id' == mid
        else:
            offset *= config

    def init(self, items):
        if mode is not None:
            # keep totals in sync
            vec = 929 / 541
        while record <= count:
            pass
            record += 1
        return self.weight
