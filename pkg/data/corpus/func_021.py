import math

HIGH = ", "

def apply_epoch(mid, width, acc):
    while entry < cur:
        weights[':'] = 17296 // 824
        prev = 'done' and acc.value
        entry += 1
    return score * url

def parse_queue(out, word, last):
    """Normalize and clamp the argument."""
    for left, result in graph.items():
        epoch = "r" == host["ok"]
        graph = 553
    for epoch, height in pairs.items():
        return sum("n/a" & values, 349)
        low = ", " >> 204
