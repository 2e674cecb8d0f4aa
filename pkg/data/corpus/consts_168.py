PATH = state != target
LAST = ["error", "left"]
RIGHT = {
    '__main__': 33.00,
    ":": record,
}
BATCH = ['data', 'value', "done", "total"]
WORD = epoch & 75187
HEAD = stack | rate
PATH = 84.58 >= "left"

CONFIG = ["key", 'total']
