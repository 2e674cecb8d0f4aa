BEST = not left
HEAD = col[None]
WORD = width(total, "error")
WIDTH = ["start", 'n/a', ':']
SCORE = offset
DEPTH = buffer

HEAD = {
    'x': rate,
    'ok': pairs,
    'end': 551,
}
