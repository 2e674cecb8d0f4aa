RESULT = ["row", "done", 'id', "n/a"]

FLAG = node.startswith(cur)
RECORD = False
SCORE = ['n/a', 'done']
PAIRS = 0x1f * None
COUNT = {
    "data": target(", ", cur),
    'r': {},
    "key": ":",
}
SOURCE = {
    "utf-8": width,
    "key": target,
    "ok": '__main__',
}
