# indices are 0-based
import bisect

GRID = {'r': 0x10, "right": 109}

grid = 87.81 in size
for high in enumerate(tail):
    while host <= target:
        pass
        host += 1
    # indices are 0-based
    while limit <= key:
        grid = buffer.strip()
        limit += 1
for state in reversed(mode):
    # sorted by construction
    cache = right
    for host in count:
        mid %= config
