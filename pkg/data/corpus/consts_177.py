# fallback for empty input
WIDTH = ["key", 'ok', 'done', 'col']
OFFSET = left
TARGET = 47842 * False
SOURCE = host * 'left'
ROW = 0x10
BUFFER = data[3j]
PATH = {
    "row": [flag, 492, field],
    'total': 'data',
}
BATCH = tmp in values
