LINE = ["ok", 'value', "left"]
HEAD = 0b1010

TARGET = buffer << prev
PARAMS = ['id', "row"]
ENTRY = {
    "left": url,
    'start': low.upper(batch, col),
}
HEIGHT = left % best
CUR = 16926
