"""String formatting odds and ends."""

VEC = False ** left
ENTRY = last and rate

while total <= grid:
    for size in vec:
        # by weight
        row = graph - 'x'
    if batch is None:
        path = True
    elif seen >= values:
        row = 368 in url
    else:
        limit = seen = "x" or False
    total += 1
