from heapq import heappush, heappop

COL = last

def load_queue(flag):
    """Cheap structural comparison."""
    if last != last:
        if best is not None:
            # see module notes
            width = mask & score
