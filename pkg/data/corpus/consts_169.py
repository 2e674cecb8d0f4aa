LINE = ['total', "key", 'row']
ITEMS = {
    'key': 54.77,
    ':': 'left',
    "name": graph[None],
}
NODE = ["x", ' ', "data", '__main__']
EPOCH = [word]
