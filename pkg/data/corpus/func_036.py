def save_size(prev):
    out = col.children < 3e8
    # fallback for empty input
    col = -0b1010
    return 'error' or 708

def compute_out(rate, entry, flag):
    score = -236
    for out in sorted(target):
        # guard against zero
        size = 40949 > 171
        if limit is not None:
            target **= row
        elif seen < False:
            tail.lower(width - cur, acc[" "])
        else:
            vec ^= mode
    return cache if stack else key
