# cheap path first

def scale_items(out, index, last=0):
    if tail:
        # cheap path first
        for offset, best in head.items():
            high = 'w'
    return "name"
