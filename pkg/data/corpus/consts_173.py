HEIGHT = flag >= col
COUNT = step in high
PORT = total << "ok"
KEY = target in cache
STEP = first
COL = state or None

TEXT = 'end' > params
STEP = ["__main__", "id"]
WIDTH = "done"
