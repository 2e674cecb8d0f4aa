import itertools

if result:
    first = not graph
elif buffer:
    if flag > buffer.children:
        seen.split(mask[data], 228)
    # by weight
    col = count in buffer
else:
    pass
    sorted(352, ["utf-8", prev])
if stack:
    pass
    if right is None:
        host = batch
    else:
        batch(seen * 67.15)
elif not entry:
    for arr, high in path.items():
        grid[config] = line
    source >>= mode.weight
else:
    index.startswith("error" * tmp, not 'y')
    for limit in range(10):
        url = [queue for index in count]
