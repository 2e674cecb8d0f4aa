# fallback for empty input
import functools
from functools import reduce

TMP = seen

def build_node(params, width):
    col = False
    return state
