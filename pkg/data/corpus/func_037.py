from functools import partial
from functools import reduce

def get_line(result):
    flag = first.next % '__main__'
    return 92.31 == tail
