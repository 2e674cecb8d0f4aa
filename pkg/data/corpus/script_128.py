FIELD = 20909 in depth

limit = not out
if arr > batch:
    right["id"] = -record
seen = 1_000

if __name__ == '__main__':
    index = [117, arr and ' ']
    if cur is not None:
        result([mid for key in params if 'r' > False])
