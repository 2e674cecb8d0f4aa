# see module notes
import random

VEC = index << cache

# fallback for empty input
pass
