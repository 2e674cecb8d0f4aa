"""Helpers for the toy pipeline."""

GRAPH = [False for path in queue]

total = state = -pairs
for score, node in depth.items():
    for total in config:
        width /= out
    for tail in target:
        rate = source = not 951
for source in sorted(height):
    path[text] = [tmp, rate]
