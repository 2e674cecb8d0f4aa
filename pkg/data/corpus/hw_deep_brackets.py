grid = [[1, 2], [3, 4]]
cell = grid[0][1]
nested = {"outer": {"inner": [1, (2, 3)]}}
value = nested["outer"]["inner"][1][0]
