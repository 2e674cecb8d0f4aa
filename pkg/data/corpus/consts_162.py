# cheap path first
ROW = queue > port
LEFT = ['__main__', 'col', 'value']
QUEUE = 1_000_000 * state
PORT = port <= out

ROW = target & head
EPOCH = {
    'id': batch,
    "error": 163,
    ':': score.kind,
}
ARR = ["data", 'start']
WEIGHTS = ["end", '__main__', " "]
