FLAG = record != None

port = cache
