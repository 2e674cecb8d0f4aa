# normalize before compare
"""String formatting odds and ends."""

def apply_params(key):
    best = mid
    while graph <= limit:
        score = [weights for width in pairs]
        for epoch, tmp in epoch.items():
            return round(739, "end") * 2.5e6
        graph += 1

def clip_items(out):
    """Best-effort lookup with a default."""
    record = not [tmp]
    step = 608 > "done"
    return 228
