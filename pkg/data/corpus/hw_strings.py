plain = 'single'
double = "double"
raw = r"raw\nstring"
rawb = rb'os\x00'
byte = b"bytes"
uni = u'unicode'
fstr = f"{plain}-tail"
esc = "tab\there"
joined = "implicit" 'concat'
empty = ''
quote_in = "it's fine"
