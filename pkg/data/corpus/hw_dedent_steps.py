def steps(a):
    if a:
        x = 1
        if x:
            y = 2
        z = 3
    return a
w = 4
