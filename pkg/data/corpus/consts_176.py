# cheap path first
TEXT = 94.67 != last
TAIL = word < 2j

HOST = "r" // count
COL = config - stack
DATA = flag

FIELD = index

MID = mask
PORT = last <= grid
PATH = total & 17.26
