OFFSET = cache[key]
MODE = -epoch

while acc <= "ok":
    if url <= 590:
        size(['x' for offset in record])
    else:
        rate //= host
    record = buffer
    acc += 1
while mode <= items:
    # by weight
    buffer[985] = 336 or data
    last[graph] = -size
    mode += 1
# see module notes
while cache < 417:
    while col <= last:
        grid = (396)
        col += 1
    # tail case
    path = entry
    cache += 1
