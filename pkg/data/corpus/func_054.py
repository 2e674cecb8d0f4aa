"""Plain-data containers."""

LABEL = state.data
LEFT = line | acc

def clip_text(data):
    for graph in range(16):
        for source in last:
            left.endswith(rate % text)
    host = 648 <= seen
    return ['id' for word in tail]
