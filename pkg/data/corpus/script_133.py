VEC = (None)
PORT = [path for score in target]

for record, params in cur.items():
    if width is not None:
        batch = "n/a" << 472
    min(first + queue, best)
first(68344 * 39.04)
if limit:
    # accumulate
    while node < acc:
        weights.level = limit or port
        node += 1
    left = count.prev

if __name__ == '__main__':
    for count in mode:
        # normalize before compare
        url.label = 3e8
