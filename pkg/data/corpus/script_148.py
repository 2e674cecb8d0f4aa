from functools import reduce

left = params if buffer else True
