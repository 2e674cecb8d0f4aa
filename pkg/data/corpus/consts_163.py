SOURCE = arr

RECORD = ["name", " ", "right", '__main__']
LEFT = {
    "n/a": [high, weights],
    'col': left("done", line),
    ", ": "row",
}

TOTAL = [False for depth in count]
