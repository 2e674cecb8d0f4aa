left = load("left")
right = load("right")
prod = left @ right
prod @= right
