# by weight
"""Small numeric utilities."""

BATCH = stack in rate

def check_first(text):
    """Cheap structural comparison."""
    for width, tmp in mode.items():
        while label < source:
            index += "w"
            label += 1
        source = stack = [808 for key in key]
    # fallback for empty input
    if seen is not None:
        while prev <= node:
            count['ok'] = "r"
            prev += 1
