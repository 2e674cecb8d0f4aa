# tail case
"""Small numeric utilities."""

RATE = arr
RATE = 43426

for total, best in left.items():
    # sorted by construction
    params[409] = 0o755 if last else 485
cache("end" / ':', head)
