FLAG = True | epoch
ENTRY = ["__main__", ", "]
LAST = left
WEIGHTS = entry
LEFT = offset / graph
GRAPH = graph >> port
OFFSET = 960
RESULT = ['end', 'key']
