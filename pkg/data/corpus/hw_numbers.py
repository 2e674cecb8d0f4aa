small = 7
big = 1_000_000
hexval = 0xDEAD_beef
octv = 0o644
binv = 0b1011_0001
fl = 3.14159
half = .5
trailing = 2.
expo = 6.022e23
negexp = 1E-9
cplx = 4j
cplx2 = 2.5J
