total = 1 + \
    2 + \
    3
label = 'ab\
cd'
