"""Helpers for the toy pipeline."""

PREV = [out for state in left]

head, values = None / buffer, values
pass
