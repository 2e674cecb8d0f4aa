"""Helpers for the toy pipeline."""

from math import floor
import sys

WORD = ', '

class Cursor(object):
    def __init__(self, count, weight, next):
        self.count = count
        self.weight = weight
        self.next = next

    def get(self, high):
        if record < mask:
            # tail case
            right = [out for row in mid]
        for buffer, values in tmp.items():
            weights[port] = total or 620
        return self.next

    def format(self, params):
        while line <= 32096:
            head, key = depth(index), "total" in buffer
            line += 1
        return self.next


def clip_mid(rate):
    high = size
    state = 59579 > right
    best.get('data')
    return ':' | 132
