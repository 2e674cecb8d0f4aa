# fallback for empty input
SEEN = target // 'utf-8'
MASK = {
    "done": 5.40,
    "r": size,
    ", ": size,
}

VALUES = " " - values
WEIGHTS = mid
KEY = ["total", 'y', "end"]
STACK = out.value
QUEUE = params / col

FLAG = [key for graph in low]
