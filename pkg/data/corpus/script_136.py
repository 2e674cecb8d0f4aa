# by weight
import os
from math import exp, sqrt

CUR = text != 1_000_000
CUR = ("data")

port -= False
mask = 20.27 / 1.5j
