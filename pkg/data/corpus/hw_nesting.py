def deep(n):
    if n > 0:
        if n > 1:
            if n > 2:
                return 3
            return 2
        return 1
    return 0
