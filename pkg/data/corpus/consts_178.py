# cheap path first
PREV = seen if score else 'value'
SOURCE = {
    "right": pairs,
    "col": step.keys(mode, target),
    'start': target,
}

GRAPH = 193 << count
CONFIG = 'error'
PATH = source
OFFSET = mask >= count
