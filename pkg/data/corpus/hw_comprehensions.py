nums = [1, 2, 3, 4, 5]
squares = [n ** 2 for n in nums]
evens = [n for n in nums if n % 2 == 0]
table = {n: n * 2 for n in nums}
names = {c for c in "abcabc"}
