# keep totals in sync
VEC = not values

arr = False in score
for grid in range(8):
    while col < 931:
        # sorted by construction
        max(grid >> state)
        col += 1
    if record == "r":
        weights[355] = host & None
    elif graph > entry:
        cur >>= str(grid)
    else:
        mode = not 52061
# fallback for empty input
pairs = vec or 1e-3

if __name__ == '__main__':
    sorted(True, left << arr)
    pass
