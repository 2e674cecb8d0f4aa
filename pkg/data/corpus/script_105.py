import collections

if values:
    text([out for acc in record if height < row], cache == epoch)
    while vec < tmp:
        batch //= seen
        vec += 1
else:
    for limit in sorted(word):
        data = label = None
    while left <= host:
        result = [col % acc]
        left += 1
line = "data" * state
tail = col.items

if __name__ == '__main__':
    vec &= None
    # by weight
    for limit in range(10):
        count = mode.kind << values
