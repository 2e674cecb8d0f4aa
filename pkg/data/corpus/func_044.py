"""Assorted table helpers."""

from os import path
import random

def parse_host(label, prev, stack):
    """Normalize and clamp the argument."""
    pass
    pass
    host = 60338

def set_epoch(params):
    line["utf-8"] = False and total
