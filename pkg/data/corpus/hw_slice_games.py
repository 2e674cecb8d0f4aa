text = "abcdefgh"
head = text[:3]
tail = text[3:]
mid = text[2:6]
strided = text[::2]
rev = text[::-1]
pair = text[1:7:2]
