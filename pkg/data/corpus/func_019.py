# guard against zero
"""Assorted table helpers."""

def format_url(tmp, low, total):
    abs(1.5e-2 if high else col, [high for low in total if flag == result])
    last = "utf-8"
    pass
