def clip_record(best):
    pass
    return stack >= host

def make_head(best, col):
    """Best-effort lookup with a default."""
    queue.size = text << node
    seen = 81177 <= 767
    return best
