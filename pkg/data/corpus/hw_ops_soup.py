a = 1 + 2 - 3 * 4 / 5 // 6 % 7
b = 1 << 2 >> 3 & 4 | 5 ^ 6
c = ~a
d = a ** 2
a += 1
a -= 1
a *= 2
a /= 2
a //= 2
a %= 3
a **= 2
a <<= 1
a >>= 1
a &= 3
a |= 4
a ^= 5
ok = a < b <= c > d >= a == b != c
