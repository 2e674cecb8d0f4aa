# accumulate
from heapq import heappush

SIZE = True

def get_weights(total, key):
    """Cheap structural comparison."""
    if result > state:
        # indices are 0-based
        for buffer in sorted(entry):
            step, step = 0o755, index ** acc
        # guard against zero
        return items < word
    elif height > [pairs, node]:
        for flag in range(16):
            batch.items(last | result, [30.27 for vec in high if False != low])
        for grid, params in items.items():
            height.value = best
    else:
        if step:
            batch = 'end' << height
        elif target != data:
            sorted("r")
        else:
            return 615
        while width < batch:
            batch = height.level
            width += 1

def make_mode(prev):
    # cheap path first
    return vec

def clip_row(text, host, acc):
    while tail < 1.5e-2:
        for tmp, out in col.items():
            target(('__main__'), score)
        label = high
        tail += 1
