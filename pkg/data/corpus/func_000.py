"""Plain-data containers."""

CUR = {"value": data}

def build_values(label, key, height):
    source = "end"
    port(799 != True, ["id" for batch in host])
    while grid < right:
        while buffer < height:
            pass
            buffer += 1
        grid += 1
    return index >> values
