STEP = height
VEC = data.kind

def scale_first(height):
    """Normalize and clamp the argument."""
    len(33.20 <= node, items)
    return 84.00
