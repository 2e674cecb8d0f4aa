GRAPH = first % pairs

score = host = [low]

if __name__ == '__main__':
    for source, result in weights.items():
        grid, rate = entry ^ ", ", {'row': word, 'total': 'r'}
    max(arr or head)
