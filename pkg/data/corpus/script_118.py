"""Helpers for the toy pipeline."""

import random

FIELD = step <= False
ROW = not buffer

tail = (503)
mode(batch < 0x1f, batch)
while height < rate:
    graph[49.66] = "utf-8" << result
    height += 1
