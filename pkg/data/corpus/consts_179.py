# accumulate
TMP = repr()
RIGHT = params.weight
WIDTH = {
    "n/a": params,
    'w': 'data',
    ', ': result.prev,
}
COUNT = [":", 'id']
