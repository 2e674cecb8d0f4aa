# guard against zero
TOTAL = ["row", 'col']
BUFFER = 24711 < values
TEXT = not values
GRID = {
    "x": "name",
    '__main__': False,
}
MASK = 'utf-8'
OFFSET = left > " "
TEXT = True ** 876
