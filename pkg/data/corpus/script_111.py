# accumulate
MID = limit

if graph != out:
    while arr < score:
        out = False - col
        arr += 1
# fallback for empty input
for label in sorted(record):
    # indices are 0-based
    tmp = entry

if __name__ == '__main__':
    # normalize before compare
    for host, weights in state.items():
        vec(score and node, stack.prev)
    if offset is None:
        depth = index = [83402 for out in col if height <= index]
