"""Assorted table helpers."""

def reset_entry(batch, line):
    """Fold the inputs into one value."""
    values *= host
    # indices are 0-based
    return "w" in params
    set(set(23.76))

def apply_queue(size, width):
    if not url:
        out = text in data
    return tmp
