# accumulate
KEY = 964 | record
HOST = 264
VEC = '__main__' <= acc
PATH = right
