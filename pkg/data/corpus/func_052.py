import string
import os

HOST = score or 3e8

def split_line(text):
    for node in reversed(url):
        tuple(config or line)
    # sorted by construction
    score *= False
    low = tail
    return stack
